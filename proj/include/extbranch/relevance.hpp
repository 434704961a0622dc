#ifndef EXTBRANCH_RELEVANCE_HPP
#define EXTBRANCH_RELEVANCE_HPP

#include <optional>
#include <vector>

#include "extbranch/arthur.hpp"

namespace extbranch::relevance {

using arthur::ArthurParam;
using arthur::ArthurRep;
using arthur::CuspidalLine;

// The four matching families of the strong-relevance decomposition. Each
// pair records the shared line and the two integer parameters; the side
// entries are reconstructed from them:
//
//   family 1 (c,a): pi1 has (line,c,a),   pi2 has (line,c,a-1) unless a=1.
//   family 2 (c,b): pi2 has (line,c,b),   pi1 has (line,c,b-1) unless b=1.
//   family 3 (f,d): pi1 has (line,f,d),   pi2 has (line,d-1,f) unless d=1.
//   family 4 (e,f): pi2 has (line,f,e),   pi1 has (line,e-1,f) unless e=1.
//
// Entries are (line, Deligne size, Arthur size). Dimension-zero sides are
// represented by absence, never stored.
struct Family1Pair { CuspidalLine line; int c = 1; int a = 1; };
struct Family2Pair { CuspidalLine line; int c = 1; int b = 1; };
struct Family3Pair { CuspidalLine line; int f = 1; int d = 1; };
struct Family4Pair { CuspidalLine line; int e = 1; int f = 1; };

struct RelevanceCertificate {
  std::vector<Family1Pair> family1;
  std::vector<Family2Pair> family2;
  std::vector<Family3Pair> family3;
  std::vector<Family4Pair> family4;

  void canonicalize();
};

// Decides the decomposition condition on a pair of formal parameters by
// exhaustive backtracking over typed matchings. Absence of a certificate
// is a definitive negative.
std::optional<RelevanceCertificate> strong_ext_relevant_param(const ArthurParam& p1,
                                                              const ArthurParam& p2);

// Same predicate decided directly on Speh factors through the highest
// derivative and duality patterns.
std::optional<RelevanceCertificate> strong_ext_relevant_rep(const ArthurRep& pi1,
                                                            const ArthurRep& pi2);

// Re-checks that the certificate's families reassemble exactly the two
// parameters with all stated size relations.
bool certificate_validate(const RelevanceCertificate& cert, const ArthurParam& p1,
                          const ArthurParam& p2);

// Structural symmetry: a certificate for (pi1, pi2) becomes one for
// (contragredient(pi2), contragredient(pi1)) with families 1<->2, 3<->4
// exchanged and all lines dualized.
RelevanceCertificate swapped_dual(const RelevanceCertificate& cert);

}  // namespace extbranch::relevance

#endif
