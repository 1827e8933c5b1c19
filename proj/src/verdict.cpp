#include "eseq/verdict.hpp"

namespace eseq {

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::ConvergentTo:
      return "convergent-to";
    case VerdictKind::DivergentCertified:
      return "divergent-certified";
    case VerdictKind::DivergentEvidence:
      return "divergent-evidence";
    case VerdictKind::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

}  // namespace eseq
