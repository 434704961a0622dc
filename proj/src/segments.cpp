#include "extbranch/segments.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace extbranch::segments {

std::string dual_line_id(const std::string& id) {
  if (!id.empty() && id.back() == '^') return id.substr(0, id.size() - 1);
  return id + "^";
}

CuspidalLine make_line(const std::string& id, int degree) {
  return make_line(id, degree, dual_line_id(id));
}

CuspidalLine make_line(const std::string& id, int degree, const std::string& dual) {
  if (degree < 1) throw std::invalid_argument("cuspidal line degree must be >= 1");
  if (id.empty()) throw std::invalid_argument("empty cuspidal line id");
  return CuspidalLine{id, degree, dual};
}

CuspidalLine dual_line(const CuspidalLine& line) {
  return CuspidalLine{line.dual, line.degree, line.id};
}

bool point_less(const CuspidalPoint& l, const CuspidalPoint& r) {
  if (l.line.id != r.line.id) return l.line.id < r.line.id;
  if (l.line.degree != r.line.degree) return l.line.degree < r.line.degree;
  return l.x < r.x;
}

Segment::Segment(CuspidalLine line_in, Rat a_in, Rat b_in)
    : line(std::move(line_in)), a(std::move(a_in)), b(std::move(b_in)) {
  Rat span = b - a;
  if (!is_integer(span) || span < 0)
    throw std::invalid_argument("segment span b - a must be a non-negative integer");
}

long Segment::length() const {
  Rat span = b - a;
  return span.get_num().get_si() + 1;
}

bool segment_less(const Segment& l, const Segment& r) {
  if (l.line.id != r.line.id) return l.line.id < r.line.id;
  if (l.a != r.a) return l.a < r.a;
  return l.b < r.b;
}

Multisegment::Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) {
  std::sort(segs_.begin(), segs_.end(), segment_less);
}

void Multisegment::add(Segment s) {
  auto it = std::lower_bound(segs_.begin(), segs_.end(), s, segment_less);
  segs_.insert(it, std::move(s));
}

Multisegment Multisegment::united(const Multisegment& o) const {
  std::vector<Segment> all = segs_;
  all.insert(all.end(), o.segs_.begin(), o.segs_.end());
  return Multisegment(std::move(all));
}

Linked linked(const Segment& d1, const Segment& d2) {
  if (!(d1.line == d2.line)) return Linked::NotLinked;
  // Same line: exponents differ by integers or the segments are unrelated.
  if (!is_integer(d1.a - d2.a)) return Linked::NotLinked;
  if (d1.a < d2.a && d2.a - 1 <= d1.b && d1.b < d2.b) return Linked::FirstPrecedes;
  if (d2.a < d1.a && d1.a - 1 <= d2.b && d2.b < d1.b) return Linked::SecondPrecedes;
  return Linked::NotLinked;
}

std::vector<Segment> standard_order(const Multisegment& m) {
  std::vector<Segment> out = m.segments();
  std::sort(out.begin(), out.end(), [](const Segment& l, const Segment& r) {
    if (l.b != r.b) return l.b > r.b;
    if (l.a != r.a) return l.a > r.a;
    return l.line.id < r.line.id;
  });
  return out;
}

std::vector<CuspidalPoint> cuspidal_support(const Multisegment& m) {
  std::vector<CuspidalPoint> pts;
  for (const Segment& s : m.segments()) {
    for (long k = 0; k < s.length(); ++k)
      pts.push_back(CuspidalPoint{s.line, s.a + Rat(k)});
  }
  std::sort(pts.begin(), pts.end(), point_less);
  return pts;
}

bool in_integral_line(const CuspidalPoint& p, std::span<const CuspidalPoint> support) {
  for (const CuspidalPoint& q : support) {
    if (q.line == p.line && is_integer(p.x - q.x)) return true;
  }
  return false;
}

bool c_omega_member(std::span<const CuspidalPoint> support,
                    std::span<const CuspidalPoint> omega_support) {
  for (const CuspidalPoint& p : support) {
    bool in_omega = false;
    for (const CuspidalPoint& q : omega_support)
      if (q == p) { in_omega = true; break; }
    if (in_omega) continue;
    if (in_integral_line(p, omega_support)) return false;
  }
  return true;
}

}  // namespace extbranch::segments
