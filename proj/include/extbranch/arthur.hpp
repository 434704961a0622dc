#ifndef EXTBRANCH_ARTHUR_HPP
#define EXTBRANCH_ARTHUR_HPP

#include <vector>

#include "extbranch/segments.hpp"

namespace extbranch::arthur {

using segments::CuspidalLine;
using segments::CuspidalPoint;
using segments::Multisegment;

// The irreducible unitary representation u_rho(a,b): a discrete-series
// block of size a spread over b half-integral twists. The base point is
// always unitary (exponent 0); twisted copies only appear inside
// multisegments.
struct Speh {
  CuspidalLine line;
  int a = 1;  // Deligne size
  int b = 1;  // Arthur size

  Speh(CuspidalLine line, int a, int b);
  CuspidalPoint base_point() const { return CuspidalPoint{line, Rat(0)}; }
  int size() const { return a * b * line.degree; }
  bool cuspidal() const { return a == 1 && b == 1; }

  bool operator==(const Speh& o) const { return line == o.line && a == o.a && b == o.b; }
};

bool speh_less(const Speh& l, const Speh& r);

// An irreducible product of Speh factors; multiset semantics.
class ArthurRep {
 public:
  ArthurRep() = default;
  explicit ArthurRep(std::vector<Speh> factors);

  void add(Speh u);
  const std::vector<Speh>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  ArthurRep united(const ArthurRep& o) const;
  // Removes one copy of the given factor; throws if absent.
  ArthurRep without(const Speh& u) const;
  bool contains(const Speh& u) const;

  bool operator==(const ArthurRep& o) const { return factors_ == o.factors_; }

 private:
  std::vector<Speh> factors_;
};

// One summand phi (x) V_deligne (x) V_arthur of a formal parameter; phi is
// an opaque label carrying only its line and dimension.
struct ArthurSummand {
  CuspidalLine phi;
  int deligne = 1;
  int arthur = 1;

  bool operator==(const ArthurSummand& o) const {
    return phi == o.phi && deligne == o.deligne && arthur == o.arthur;
  }
};

bool summand_less(const ArthurSummand& l, const ArthurSummand& r);

class ArthurParam {
 public:
  ArthurParam() = default;
  explicit ArthurParam(std::vector<ArthurSummand> summands);

  void add(ArthurSummand s);
  const std::vector<ArthurSummand>& summands() const { return summands_; }
  bool empty() const { return summands_.empty(); }

  bool operator==(const ArthurParam& o) const { return summands_ == o.summands_; }

 private:
  std::vector<ArthurSummand> summands_;
};

// The quotient-presentation multisegment of u_rho(a,b): b parallel
// segments of length a centred at 0.
Multisegment langlands_msegs(const Speh& u);
Multisegment langlands_msegs(const ArthurRep& pi);

// The submodule-presentation multisegment: a parallel segments of length b.
Multisegment zelevinsky_msegs(const Speh& u);
Multisegment zelevinsky_msegs(const ArthurRep& pi);

// Multisegment of the L-parameter obtained by restricting the extra
// SL2-factor to half-integral twists.
Multisegment l_param_msegs(const ArthurParam& psi);

// Involutive duality swapping the two SL2 sizes on every factor.
ArthurRep az_dual(const ArthurRep& pi);
Speh az_dual(const Speh& u);

// Normalized highest derivative, factor by factor; factors with b = 1
// vanish.
ArthurRep highest_derivative(const ArthurRep& pi);

// Contragredient: every factor moves to the dual line.
ArthurRep contragredient(const ArthurRep& pi);

int gl_size(const ArthurRep& pi);

ArthurParam param_of(const ArthurRep& pi);
ArthurRep rep_of(const ArthurParam& psi);

std::vector<CuspidalPoint> cuspidal_support(const ArthurRep& pi);

}  // namespace extbranch::arthur

#endif
