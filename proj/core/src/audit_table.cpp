#include "amalgam/selftest.hpp"

namespace amalgam {

namespace {

constexpr auto H = Status::Holds;
constexpr auto F = Status::Fails;
constexpr auto O = Status::OutsideHypothesis;
constexpr auto X = Status::OpenInPaper;
constexpr auto I = BoundaryKind::Interior;
constexpr auto N = BoundaryKind::NonStrictBoundary;
constexpr auto S = BoundaryKind::StrictBoundaryExcluded;

}  // namespace

// tau1(p,q) = d max(0, 1/q - 1/2, 1/p + 1/q - 1), sigma1 with min,
// tau(p,q) = d max(0, 1/q - 1/p, 1/p + 1/q - 1). Weights are the printed ones.
const std::vector<AuditedCase>& audited_cases() {
  static const std::vector<AuditedCase> cases = {
      // Sobolev and local Hardy
      {"sobolev-hardy", "L[r=2]", "W[p=2,q=2]", 1, H, "sobolev-to-wiener", "(2)", N,
       "r=p=2; 2^r=2<=q so (2); tau1(2,2)=0; s=0>=0"},
      {"sobolev-hardy", "L[r=2]", "W[p=2,q=1]", 1, F, "sobolev-to-wiener", "(1)", I,
       "r>q, q<2 so (1); tau1(2,1)=max(0,1/2,1/2)=1/2; 0>1/2 false"},
      {"sobolev-hardy", "L[r=2,s=1/2]", "W[p=2,q=1]", 1, F, "sobolev-to-wiener", "(1)", S,
       "(1) strict at s=tau1(2,1)=1/2"},
      {"sobolev-hardy", "L[r=2,s=3/4]", "W[p=2,q=1]", 1, H, "sobolev-to-wiener", "(1)", I, "3/4>1/2"},
      {"sobolev-hardy", "L[r=2,s=1]", "W[p=2,q=1]", 2, F, "sobolev-to-wiener", "(1)", S,
       "d=2: tau1(2,1)=1; strict at s=1"},
      {"sobolev-hardy", "L[r=4]", "W[p=2,q=2]", 1, F, "sobolev-to-wiener", "index: r <= p", I, "r=4>p=2"},
      {"sobolev-hardy", "L[r=1]", "W[p=inf,q=inf]", 1, H, "sobolev-to-wiener", "(3)", N,
       "r=1,q=inf so (3); tau1(1,inf)=max(0,-1/2,0)=0; s=0>=0"},
      {"sobolev-hardy", "L[r=1,s=1/2]", "W[p=1,q=2]", 1, F, "sobolev-to-wiener", "(4)", S,
       "r=1,q<inf so (4) strict; tau1(1,2)=max(0,0,1/2)=1/2"},
      {"sobolev-hardy", "W[p=2,q=2]", "L[r=2]", 1, H, "wiener-to-sobolev", "(2)", N,
       "r<inf, q<=2 so (2); sigma1(2,2)=0; s=0<=0"},
      {"sobolev-hardy", "W[p=2,q=4]", "L[r=2]", 1, F, "wiener-to-sobolev", "(1)", I,
       "r<q, q>2 so (1); sigma1(2,4)=min(0,-1/4,-1/4)=-1/4; 0<-1/4 false"},
      {"sobolev-hardy", "W[p=2,q=4,s=1/4]", "L[r=2]", 1, F, "wiener-to-sobolev", "(1)", S,
       "W^{1/4} into L^2 is W into L^{-1/4,2}; strict at s=-1/4"},
      {"sobolev-hardy", "W[p=1,q=1]", "L[r=inf]", 1, H, "wiener-to-sobolev", "(3)", N,
       "r=inf, q<=1 so (3); sigma1(inf,1)=min(0,1/2,0)=0"},
      {"sobolev-hardy", "W[p=1,q=2]", "L[r=inf]", 1, F, "wiener-to-sobolev", "(4)", I,
       "r=inf, q>1 so (4); sigma1(inf,2)=min(0,0,-1/2)=-1/2; 0<-1/2 false"},
      {"sobolev-hardy", "h[r=1]", "W[p=1,q=1/2,s=-1]", 1, F, "hardy-to-wiener", "(1)", I,
       "W^{-s} with s=1; r>q, q<2 so (1); tau1(1,1/2)=max(0,3/2,2)=2; 1>2 false"},
      {"sobolev-hardy", "h[r=1/2]", "W[p=1,q=2,s=-3/2]", 1, H, "hardy-to-wiener", "(2)", N,
       "s=3/2; r<=q so (2); tau1(1/2,2)=max(0,0,3/2)=3/2"},
      {"sobolev-hardy", "W[p=1,q=4,s=1/4]", "h[r=1]", 1, F, "wiener-to-hardy", "(1)", S,
       "W^{-s} with s=-1/4; r<q, q>2 so (1); sigma1(1,4)=min(0,-1/4,1/4)=-1/4; strict"},

      // Besov
      {"besov", "B[p=2,q=2]", "W[p=2,q=2]", 1, H, "besov-p0-to-wiener", "(1)", N,
       "p0=p=2, p>=q so (1); tau1(p0=2,q=2)=0"},
      {"besov", "B[p=1,q=2]", "W[p=2,q=2]", 1, F, "besov-p0-to-wiener", "(1)", I,
       "p0=1<=2; tau1(p0=1,q=2)=1/2; 0>=1/2 false"},
      {"besov", "B[p=1,q=2,s=1/2]", "W[p=2,q=2]", 1, H, "besov-p0-to-wiener", "(1)", N, "s=1/2>=1/2"},
      {"besov", "B[p=1,q=2,s=1]", "W[p=2,q=2]", 2, H, "besov-p0-to-wiener", "(1)", N, "d=2: tau1(1,2)=1"},
      {"besov", "B[p=2,q=1]", "W[p=2,q=1]", 1, F, "besov-p0-to-wiener", "(1)", I,
       "p>=q so (1); tau1(2,1)=1/2; 0>=1/2 false"},
      {"besov", "B[p=2,q=4]", "W[p=2,q=4]", 1, F, "besov-p0-to-wiener", "(2)", S,
       "p<q so (2) strict; tau1(2,4)=0; s=0"},
      {"besov", "B[p=2,q=4,s=1/8]", "W[p=2,q=4]", 1, H, "besov-p0-to-wiener", "(2)", I, "1/8>0"},
      {"besov", "B[p=4,q=2]", "W[p=2,q=2]", 1, F, "besov-p0-to-wiener", "index: p0 <= p", I, "p0=4>p=2"},
      {"besov", "W[p=2,q=2]", "B[p=2,q=2]", 1, H, "wiener-to-besov-p0", "(1)", N,
       "p<=q so (1); sigma1(2,2)=0; s=0<=0"},
      {"besov", "W[p=2,q=1]", "B[p=2,q=1]", 1, F, "wiener-to-besov-p0", "(2)", S,
       "p>q so (2) strict; sigma1(2,1)=min(0,1/2,1/2)=0"},
      {"besov", "B[p=2,q=1]", "W[p=2,q=2]", 1, H, "besov-q0-to-wiener", "(1)", N,
       "q0=1<=p^q=2 so (1); tau1(2,2)=0"},
      {"besov", "B[p=1,q=2,s=1]", "W[p=1,q=1]", 1, F, "besov-q0-to-wiener", "(3)", S,
       "p=1<=max(q0,2) so hypothesis holds; q<q0 so (3) strict; tau1(1,1)=1"},
      {"besov", "B[p=1,q=2,s=1/4]", "W[p=1,q=4]", 1, F, "besov-q0-to-wiener", "(2)", S,
       "p<q0<=q so (2) strict; tau1(1,4)=max(0,-1/4,1/4)=1/4"},
      {"besov", "B[p=8,q=4]", "W[p=8,q=1]", 1, X, "besov-q0-to-wiener", "", I,
       "q=1<min(q0,2)=2 and p=8>max(q0,2)=4: outside the hypothesis, left open"},
      {"besov", "W[p=2,q=2]", "B[p=2,q=4]", 1, H, "wiener-to-besov-q0", "(1)", N,
       "q0=4>=p v q=2 so (1); sigma1(2,2)=0"},
      {"besov", "W[p=4,q=4,s=1/2]", "B[p=4,q=2]", 1, F, "wiener-to-besov-q0", "(3)", S,
       "p=4>=2 so hypothesis holds; q>q0 so (3) strict; sigma1(4,4)=min(0,-1/4,-1/2)=-1/2; s=-1/2"},

      // Modulation and alpha-modulation
      {"modulation", "M[p=1,q=1]", "W[p=2,q=2]", 1, H, "modulation-to-wiener", "(1)", N,
       "p1<=p; q1=1<=p^q=2 so (1); s=0>=0"},
      {"modulation", "M[p=2,q=4]", "W[p=2,q=2]", 1, F, "modulation-to-wiener", "(2)", I,
       "q1>p^q so (2): s+1/4>1/2 needs s>1/4"},
      {"modulation", "M[p=2,q=4,s=1/4]", "W[p=2,q=2]", 1, F, "modulation-to-wiener", "(2)", S, "strict at s=1/4"},
      {"modulation", "M[p=2,q=4,s=1/2]", "W[p=2,q=2]", 2, F, "modulation-to-wiener", "(2)", S,
       "d=2: s+2/4>2/2 needs s>1/2"},
      {"modulation", "M[p=4,q=1]", "W[p=2,q=2]", 1, F, "modulation-to-wiener", "index: p1 <= p", I, "p1=4>p=2"},
      {"modulation", "W[p=2,q=2]", "M[p=2,q=2]", 1, H, "wiener-to-modulation", "(1)", N,
       "q1=2>=p v q=2 so (1); s=0<=0"},
      {"modulation", "W[p=2,q=1]", "M[p=2,q=1]", 1, F, "wiener-to-modulation", "(2)", I,
       "q1=1<p v q=2 so (2): s+1<1/2 needs s<-1/2"},
      {"modulation", "Ma[p=2,q=2,alpha=1/2]", "W[p=2,q=2]", 1, H, "alpha-modulation-to-wiener", "(1)", N,
       "p>=q so (1); alpha tau1(2,2)=0"},
      {"modulation", "Ma[p=2,q=1,s=1/4,alpha=1/2]", "W[p=2,q=1]", 1, H, "alpha-modulation-to-wiener", "(1)", N,
       "p>=q so (1); alpha tau1(2,1)=1/2*1/2=1/4"},
      {"modulation", "Ma[p=2,q=4,s=1/8,alpha=1/2]", "W[p=2,q=4]", 1, F, "alpha-modulation-to-wiener", "(2)", S,
       "p<q so (2) strict; tau(2,4)=0; 1/2*(1/2-1/4)=1/8"},
      {"modulation", "Ma[p=1,q=2,s=3/4,alpha=1/2]", "W[p=1,q=2]", 1, H, "alpha-modulation-to-wiener", "(2)", I,
       "tau(1,2)=1/2; 1/2*1/2+1/2*(1-1/2)=1/2; 3/4>1/2"},
      {"modulation", "W[p=2,q=2]", "Ma[p=2,q=2,alpha=1/2]", 1, H, "wiener-to-alpha-modulation", "(1)", N,
       "p<=q so (1); alpha sigma1(2,2)=0"},
      {"modulation", "W[p=2,q=1,s=1/4]", "Ma[p=2,q=1,alpha=1/2]", 1, F, "wiener-to-alpha-modulation", "(2)", S,
       "p>q so (2) strict; 1/2*sigma1(2,1)+1/2*(1/2-1)=-1/4; s=-1/4"},

      // Triebel and weighted sequences
      {"triebel-sequence", "F[p=1,q=2]", "W[p=1,q=1]", 1, F, "triebel-to-wiener", "(1)", I,
       "p<=q so (1); 1/p+1/q-1=1; 0>=1 false"},
      {"triebel-sequence", "F[p=1,q=2,s=1]", "W[p=1,q=1]", 1, H, "triebel-to-wiener", "(1)", N, "s=1>=1"},
      {"triebel-sequence", "F[p=1,q=2,s=2]", "W[p=1,q=1/2]", 1, F, "triebel-to-wiener", "(2)", S,
       "p>q so (2) strict; 1+2-1=2"},
      {"triebel-sequence", "F[p=1/2,q=1]", "W[p=1/2,q=1]", 1, F, "triebel-to-wiener", "(1)", I,
       "p<=q so (1); 2+1-1=2; 0>=2 false"},
      {"triebel-sequence", "F[p=2,q=2]", "W[p=2,q=2]", 1, O, "triebel-to-wiener", "", I, "needs p<=1"},
      {"triebel-sequence", "W[p=1,q=1]", "F[p=1,q=2]", 1, H, "wiener-to-triebel", "(1)", N,
       "p>=q, q<=r so (1); s=0<=0"},
      {"triebel-sequence", "W[p=1,q=1]", "F[p=1,q=1/2]", 1, F, "wiener-to-triebel", "(2)", S,
       "p>=q, q>r so (2) strict; s=0"},
      {"triebel-sequence", "W[p=1/2,q=1]", "F[p=1/2,q=1]", 1, H, "wiener-to-triebel", "(3)", N,
       "p<q<=2, q<=r so (3); s=0<=0"},
      {"triebel-sequence", "W[p=1,q=4]", "F[p=1,q=4]", 1, X, "wiener-to-triebel", "", I, "q>2 is left open"},
      {"triebel-sequence", "l0[q=1]", "l0[q=2]", 1, H, "sequence-l0", "(1)", N, "q1<=q2; s1-s2=0>=0"},
      {"triebel-sequence", "l0[q=2,s=1/2]", "l0[q=1]", 1, F, "sequence-l0", "(2)", S,
       "q1>q2: s1-s2>d(1/q2-1/q1)=1/2 strict"},
      {"triebel-sequence", "l1[q=2]", "l1[q=1]", 1, F, "sequence-l1", "(2)", S, "q1>q2: s1-s2>0 strict"},
      {"triebel-sequence", "l1[q=2,s=1/4]", "l1[q=1]", 1, H, "sequence-l1", "(2)", I, "1/4>0"},
  };
  return cases;
}

}  // namespace amalgam
