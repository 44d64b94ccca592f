#pragma once

#include <string>

#include "amalgam/family.hpp"
#include "amalgam/indices.hpp"
#include "amalgam/oracle.hpp"
#include "amalgam/rational.hpp"

namespace amalgam::detail {

// AtLeast: the embedding needs s above the threshold; AtMost: below it.
enum class Side { AtLeast, AtMost };

struct Clause {
  std::string label;
  Rational threshold;
  bool strict = false;
  FamilyKind hint = FamilyKind::ModulatedBump;
};

Verdict settle(const std::string& theorem, Side side, const Rational& s, const Clause& clause);
Verdict index_failure(const std::string& theorem, const std::string& label, FamilyKind hint);
Verdict outside(const std::string& theorem, const std::string& why);
Verdict open_in_paper(const std::string& theorem, const std::string& why);

// Counterexample family matching the active piece of tau1 / sigma1.
FamilyKind piece_hint(const PieceClassification& piece, bool strict);

// Per-theorem procedures. `s` is already in the theorem's printed convention.
// Indices are named as in the printed statements; `id` lets auxiliary
// predicates reuse a procedure under their own identifier.
using RI = ReciprocalIndex;

Verdict sobolev_to_wiener(const std::string& id, const RI& r, const RI& p, const RI& q, const Rational& s, Dimension d);
Verdict wiener_to_sobolev(const std::string& id, const RI& p, const RI& q, const RI& r, const Rational& s, Dimension d);
Verdict hardy_to_wiener(const std::string& id, const RI& r, const RI& p, const RI& q, const Rational& s, Dimension d);
Verdict wiener_to_hardy(const std::string& id, const RI& p, const RI& q, const RI& r, const Rational& s, Dimension d);
Verdict besov_p0_to_wiener(const std::string& id, const RI& p0, const RI& q, const RI& p, const Rational& s,
                           Dimension d);
Verdict wiener_to_besov_p0(const std::string& id, const RI& p, const RI& q, const RI& p0, const Rational& s,
                           Dimension d);

}  // namespace amalgam::detail
