#include "oracle_detail.hpp"

namespace amalgam::detail {

Verdict settle(const std::string& theorem, Side side, const Rational& s, const Clause& clause) {
  bool satisfied = false;
  if (side == Side::AtLeast) {
    satisfied = clause.strict ? s > clause.threshold : s >= clause.threshold;
  } else {
    satisfied = clause.strict ? s < clause.threshold : s <= clause.threshold;
  }
  Verdict v;
  v.theorem_id = theorem;
  v.clause = clause.label;
  v.threshold = clause.threshold;
  v.strict = clause.strict;
  const bool at_threshold = s == clause.threshold;
  if (satisfied) {
    v.status = Status::Holds;
    if (at_threshold && !clause.strict) v.boundary = BoundaryKind::NonStrictBoundary;
  } else {
    v.status = Status::Fails;
    v.probe_hint = clause.hint;
    if (at_threshold && clause.strict) v.boundary = BoundaryKind::StrictBoundaryExcluded;
  }
  return v;
}

Verdict index_failure(const std::string& theorem, const std::string& label, FamilyKind hint) {
  Verdict v;
  v.status = Status::Fails;
  v.theorem_id = theorem;
  v.clause = label;
  v.probe_hint = hint;
  return v;
}

Verdict outside(const std::string& theorem, const std::string& why) {
  Verdict v;
  v.status = Status::OutsideHypothesis;
  v.theorem_id = theorem;
  v.clause = why;
  return v;
}

Verdict open_in_paper(const std::string& theorem, const std::string& why) {
  Verdict v;
  v.status = Status::OpenInPaper;
  v.theorem_id = theorem;
  v.clause = why;
  return v;
}

FamilyKind piece_hint(const PieceClassification& piece, bool strict) {
  switch (piece.piece) {
    case 1:
      return strict ? FamilyKind::UniformLacunary : FamilyKind::ModulatedBump;
    case 2:
      return FamilyKind::RademacherShell;
    default:
      return FamilyKind::DyadicShellSum;
  }
}

}  // namespace amalgam::detail
