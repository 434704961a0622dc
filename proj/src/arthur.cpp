#include "extbranch/arthur.hpp"

#include <algorithm>
#include <stdexcept>

namespace extbranch::arthur {

using segments::Segment;

Speh::Speh(CuspidalLine line_in, int a_in, int b_in)
    : line(std::move(line_in)), a(a_in), b(b_in) {
  if (a < 1 || b < 1) throw std::invalid_argument("Speh sizes must be >= 1");
}

bool speh_less(const Speh& l, const Speh& r) {
  if (l.line.id != r.line.id) return l.line.id < r.line.id;
  if (l.line.degree != r.line.degree) return l.line.degree < r.line.degree;
  if (l.a != r.a) return l.a < r.a;
  return l.b < r.b;
}

ArthurRep::ArthurRep(std::vector<Speh> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(), speh_less);
}

void ArthurRep::add(Speh u) {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), u, speh_less);
  factors_.insert(it, std::move(u));
}

ArthurRep ArthurRep::united(const ArthurRep& o) const {
  std::vector<Speh> all = factors_;
  all.insert(all.end(), o.factors_.begin(), o.factors_.end());
  return ArthurRep(std::move(all));
}

ArthurRep ArthurRep::without(const Speh& u) const {
  std::vector<Speh> rest = factors_;
  auto it = std::find(rest.begin(), rest.end(), u);
  if (it == rest.end()) throw std::invalid_argument("factor not present");
  rest.erase(it);
  return ArthurRep(std::move(rest));
}

bool ArthurRep::contains(const Speh& u) const {
  return std::find(factors_.begin(), factors_.end(), u) != factors_.end();
}

bool summand_less(const ArthurSummand& l, const ArthurSummand& r) {
  if (l.phi.id != r.phi.id) return l.phi.id < r.phi.id;
  if (l.phi.degree != r.phi.degree) return l.phi.degree < r.phi.degree;
  if (l.deligne != r.deligne) return l.deligne < r.deligne;
  return l.arthur < r.arthur;
}

ArthurParam::ArthurParam(std::vector<ArthurSummand> summands) : summands_(std::move(summands)) {
  for (const auto& s : summands_)
    if (s.deligne < 1 || s.arthur < 1)
      throw std::invalid_argument("parameter summand sizes must be >= 1");
  std::sort(summands_.begin(), summands_.end(), summand_less);
}

void ArthurParam::add(ArthurSummand s) {
  if (s.deligne < 1 || s.arthur < 1)
    throw std::invalid_argument("parameter summand sizes must be >= 1");
  auto it = std::lower_bound(summands_.begin(), summands_.end(), s, summand_less);
  summands_.insert(it, std::move(s));
}

Multisegment langlands_msegs(const Speh& u) {
  Multisegment m;
  Rat half_a = Rat(u.a - 1) / 2;
  Rat half_b = Rat(u.b - 1) / 2;
  for (int j = 0; j < u.b; ++j) {
    Rat shift = half_b - Rat(j);
    m.add(Segment(u.line, -half_a + shift, half_a + shift));
  }
  return m;
}

Multisegment langlands_msegs(const ArthurRep& pi) {
  Multisegment m;
  for (const Speh& u : pi.factors()) m = m.united(langlands_msegs(u));
  return m;
}

Multisegment zelevinsky_msegs(const Speh& u) {
  Multisegment m;
  Rat half_a = Rat(u.a - 1) / 2;
  Rat half_b = Rat(u.b - 1) / 2;
  for (int i = 0; i < u.a; ++i) {
    Rat shift = half_a - Rat(i);
    m.add(Segment(u.line, -half_b + shift, half_b + shift));
  }
  return m;
}

Multisegment zelevinsky_msegs(const ArthurRep& pi) {
  Multisegment m;
  for (const Speh& u : pi.factors()) m = m.united(zelevinsky_msegs(u));
  return m;
}

Multisegment l_param_msegs(const ArthurParam& psi) {
  Multisegment m;
  for (const ArthurSummand& s : psi.summands())
    m = m.united(langlands_msegs(Speh(s.phi, s.deligne, s.arthur)));
  return m;
}

Speh az_dual(const Speh& u) { return Speh(u.line, u.b, u.a); }

ArthurRep az_dual(const ArthurRep& pi) {
  ArthurRep out;
  for (const Speh& u : pi.factors()) out.add(az_dual(u));
  return out;
}

ArthurRep highest_derivative(const ArthurRep& pi) {
  ArthurRep out;
  for (const Speh& u : pi.factors())
    if (u.b >= 2) out.add(Speh(u.line, u.a, u.b - 1));
  return out;
}

ArthurRep contragredient(const ArthurRep& pi) {
  ArthurRep out;
  for (const Speh& u : pi.factors()) out.add(Speh(segments::dual_line(u.line), u.a, u.b));
  return out;
}

int gl_size(const ArthurRep& pi) {
  int n = 0;
  for (const Speh& u : pi.factors()) n += u.size();
  return n;
}

ArthurParam param_of(const ArthurRep& pi) {
  ArthurParam psi;
  for (const Speh& u : pi.factors()) psi.add(ArthurSummand{u.line, u.a, u.b});
  return psi;
}

ArthurRep rep_of(const ArthurParam& psi) {
  ArthurRep pi;
  for (const ArthurSummand& s : psi.summands()) pi.add(Speh(s.phi, s.deligne, s.arthur));
  return pi;
}

std::vector<CuspidalPoint> cuspidal_support(const ArthurRep& pi) {
  return segments::cuspidal_support(langlands_msegs(pi));
}

}  // namespace extbranch::arthur
