#include "snell/errors.hpp"

namespace snell {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DuplicateElement: return "duplicate element";
    case ErrorKind::UnknownElement: return "unknown element";
    case ErrorKind::CycleDetected: return "cycle detected";
    case ErrorKind::MalformedJson: return "malformed JSON";
    case ErrorKind::LabelOnNonCover: return "label on non-cover";
    case ErrorKind::UnlabeledEdge: return "unlabeled edge";
    case ErrorKind::IndexOutOfRange: return "index out of range";
    case ErrorKind::SizeMismatch: return "size mismatch";
    case ErrorKind::InvalidInterval: return "invalid interval";
    case ErrorKind::NotAPermutation: return "not a permutation";
    case ErrorKind::NotALinearExtension: return "not a linear extension";
    case ErrorKind::UnknownChain: return "unknown chain";
    case ErrorKind::ActionTableInvalid: return "action table invalid";
    case ErrorKind::NotBounded: return "not bounded";
    case ErrorKind::NotGraded: return "not graded";
    case ErrorKind::NotALattice: return "not a lattice";
    case ErrorKind::SnellingInvalid: return "labeling is not a snelling";
    case ErrorKind::AmbiguousSibling: return "ambiguous sibling chain";
    case ErrorKind::HeckeViolated: return "operator relations violated";
    case ErrorKind::NotGoodAction: return "action is not good";
    case ErrorKind::NoSink: return "no sink chain";
    case ErrorKind::MultipleSinks: return "multiple sink chains";
    case ErrorKind::NonTerminating: return "walk does not terminate";
    case ErrorKind::AmbiguousPermutation: return "chain permutation is ambiguous";
    case ErrorKind::EdgeConflict: return "conflicting labels for an edge";
  }
  return "unknown error";
}

bool is_input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::DuplicateElement:
    case ErrorKind::UnknownElement:
    case ErrorKind::CycleDetected:
    case ErrorKind::MalformedJson:
    case ErrorKind::LabelOnNonCover:
    case ErrorKind::UnlabeledEdge:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::SizeMismatch:
    case ErrorKind::InvalidInterval:
    case ErrorKind::NotAPermutation:
    case ErrorKind::NotALinearExtension:
    case ErrorKind::UnknownChain:
    case ErrorKind::ActionTableInvalid:
      return true;
    default:
      return false;
  }
}

}  // namespace snell
