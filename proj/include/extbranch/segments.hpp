#ifndef EXTBRANCH_SEGMENTS_HPP
#define EXTBRANCH_SEGMENTS_HPP

#include <span>
#include <string>
#include <vector>

#include "extbranch/rational.hpp"

namespace extbranch::segments {

// A cuspidal line: the integer-twist family of one unitary cuspidal base
// point. Two lines are the same iff their ids match; distinct ids are in
// general position. `dual` names the line of the contragredient base point.
struct CuspidalLine {
  std::string id;
  int degree = 1;  // size of the base point's group
  std::string dual;

  bool operator==(const CuspidalLine& o) const { return id == o.id && degree == o.degree; }
};

// Involutive default naming for dual lines: "r" <-> "r^".
std::string dual_line_id(const std::string& id);
CuspidalLine make_line(const std::string& id, int degree);
CuspidalLine make_line(const std::string& id, int degree, const std::string& dual);
CuspidalLine dual_line(const CuspidalLine& line);

// A twist of a line's base point by an exact rational exponent.
struct CuspidalPoint {
  CuspidalLine line;
  Rat x;

  bool operator==(const CuspidalPoint& o) const { return line == o.line && x == o.x; }
};

// Canonical order on points: (line id, degree, exponent).
bool point_less(const CuspidalPoint& l, const CuspidalPoint& r);

// The run of consecutive twists {a, a+1, ..., b} on one line. The span
// b - a must be a non-negative integer.
struct Segment {
  CuspidalLine line;
  Rat a;
  Rat b;

  Segment(CuspidalLine line, Rat a, Rat b);
  long length() const;  // b - a + 1
  Segment shifted(const Rat& s) const { return Segment(line, a + s, b + s); }

  bool operator==(const Segment& o) const { return line == o.line && a == o.a && b == o.b; }
};

bool segment_less(const Segment& l, const Segment& r);

// A finite multiset of segments; storage is canonically sorted so equality
// is multiset equality.
class Multisegment {
 public:
  Multisegment() = default;
  explicit Multisegment(std::vector<Segment> segs);

  void add(Segment s);
  const std::vector<Segment>& segments() const { return segs_; }
  std::size_t size() const { return segs_.size(); }
  bool empty() const { return segs_.empty(); }

  Multisegment united(const Multisegment& o) const;

  bool operator==(const Multisegment& o) const { return segs_ == o.segs_; }

 private:
  std::vector<Segment> segs_;
};

enum class Linked { NotLinked, FirstPrecedes, SecondPrecedes };

// Linkedness test; FirstPrecedes means d1 precedes d2.
Linked linked(const Segment& d1, const Segment& d2);

// Deterministic admissible ordering: no earlier segment precedes a later
// one. Sorts by b descending, then a descending, then line id.
std::vector<Segment> standard_order(const Multisegment& m);

// Multiset of the points contained in all segments.
std::vector<CuspidalPoint> cuspidal_support(const Multisegment& m);

// True iff p differs from some support point by an integer twist on the
// same line.
bool in_integral_line(const CuspidalPoint& p, std::span<const CuspidalPoint> support);

// Membership predicate for the product-friendly category attached to a
// Speh representation with the given support: every point either lies in
// the omega support or entirely off its integral line.
bool c_omega_member(std::span<const CuspidalPoint> support,
                    std::span<const CuspidalPoint> omega_support);

// Label for an irreducible via either classification; data only.
enum class LabelStyle { Langlands, Zelevinsky };
struct IrrLabel {
  Multisegment mseg;
  LabelStyle style = LabelStyle::Langlands;
};

}  // namespace extbranch::segments

#endif
