#include "extbranch/relevance.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

namespace extbranch::relevance {

using arthur::ArthurSummand;
using arthur::Speh;
using segments::dual_line;

namespace {

bool f1_less(const Family1Pair& l, const Family1Pair& r) {
  return std::tie(l.line.id, l.c, l.a) < std::tie(r.line.id, r.c, r.a);
}
bool f2_less(const Family2Pair& l, const Family2Pair& r) {
  return std::tie(l.line.id, l.c, l.b) < std::tie(r.line.id, r.c, r.b);
}
bool f3_less(const Family3Pair& l, const Family3Pair& r) {
  return std::tie(l.line.id, l.f, l.d) < std::tie(r.line.id, r.f, r.d);
}
bool f4_less(const Family4Pair& l, const Family4Pair& r) {
  return std::tie(l.line.id, l.e, l.f) < std::tie(r.line.id, r.e, r.f);
}

using State = std::vector<ArthurSummand>;

std::string state_key(const State& p1, const State& p2) {
  std::ostringstream os;
  for (const auto& s : p1) os << s.phi.id << ',' << s.deligne << ',' << s.arthur << ';';
  os << '|';
  for (const auto& s : p2) os << s.phi.id << ',' << s.deligne << ',' << s.arthur << ';';
  return os.str();
}

bool erase_one(State& v, const ArthurSummand& s) {
  auto it = std::find(v.begin(), v.end(), s);
  if (it == v.end()) return false;
  v.erase(it);
  return true;
}

// Backtracking matcher. Consumes the first remaining pi1 summand through
// every family it could belong to; once pi1 is exhausted, the leftover pi2
// summands must all be degenerate family-2 singletons. Degenerate
// consumptions are canonicalized to families 1 and 2.
struct Matcher {
  std::set<std::string> failed;

  bool search(State p1, State p2, RelevanceCertificate& cert) {
    if (p1.empty()) {
      for (const auto& s : p2) {
        if (s.arthur != 1) return false;
        cert.family2.push_back(Family2Pair{s.phi, s.deligne, 1});
      }
      return true;
    }
    std::string key = state_key(p1, p2);
    if (failed.count(key)) return false;

    ArthurSummand pivot = p1.front();
    State rest1 = p1;
    rest1.erase(rest1.begin());
    const CuspidalLine& line = pivot.phi;
    const int dl = pivot.deligne;
    const int ar = pivot.arthur;

    // Family 1: pivot = (line, c, a); partner (line, c, a-1) or absent.
    {
      State q2 = p2;
      bool ok = true;
      if (ar >= 2) ok = erase_one(q2, ArthurSummand{line, dl, ar - 1});
      if (ok && search(rest1, q2, cert)) {
        cert.family1.push_back(Family1Pair{line, dl, ar});
        return true;
      }
    }
    // Family 2: pivot = (line, c, b-1); partner (line, c, b), b = ar + 1.
    {
      State q2 = p2;
      if (erase_one(q2, ArthurSummand{line, dl, ar + 1}) && search(rest1, q2, cert)) {
        cert.family2.push_back(Family2Pair{line, dl, ar + 1});
        return true;
      }
    }
    // Family 3: pivot = (line, f, d); partner (line, d-1, f). The d = 1
    // case repeats family 1's degenerate consumption and is skipped.
    if (ar >= 2) {
      State q2 = p2;
      if (erase_one(q2, ArthurSummand{line, ar - 1, dl}) && search(rest1, q2, cert)) {
        cert.family3.push_back(Family3Pair{line, dl, ar});
        return true;
      }
    }
    // Family 4: pivot = (line, e-1, f); partner (line, f, e), e = dl + 1.
    {
      State q2 = p2;
      if (erase_one(q2, ArthurSummand{line, ar, dl + 1}) && search(rest1, q2, cert)) {
        cert.family4.push_back(Family4Pair{line, dl + 1, ar});
        return true;
      }
    }
    failed.insert(key);
    return false;
  }
};

}  // namespace

void RelevanceCertificate::canonicalize() {
  std::sort(family1.begin(), family1.end(), f1_less);
  std::sort(family2.begin(), family2.end(), f2_less);
  std::sort(family3.begin(), family3.end(), f3_less);
  std::sort(family4.begin(), family4.end(), f4_less);
}

std::optional<RelevanceCertificate> strong_ext_relevant_param(const ArthurParam& p1,
                                                              const ArthurParam& p2) {
  Matcher m;
  RelevanceCertificate cert;
  if (!m.search(p1.summands(), p2.summands(), cert)) return std::nullopt;
  cert.canonicalize();
  return cert;
}

namespace {

// Representation-side matcher: the same search phrased through the Speh
// operations pi |-> pi^- and D.
struct RepMatcher {
  std::set<std::string> failed;

  static std::string key_of(const std::vector<Speh>& v1, const std::vector<Speh>& v2) {
    std::ostringstream os;
    for (const auto& u : v1) os << u.line.id << ',' << u.a << ',' << u.b << ';';
    os << '|';
    for (const auto& u : v2) os << u.line.id << ',' << u.a << ',' << u.b << ';';
    return os.str();
  }

  static bool erase_one(std::vector<Speh>& v, const Speh& u) {
    auto it = std::find(v.begin(), v.end(), u);
    if (it == v.end()) return false;
    v.erase(it);
    return true;
  }

  bool search(std::vector<Speh> v1, std::vector<Speh> v2, RelevanceCertificate& cert) {
    if (v1.empty()) {
      // Leftover second-side factors must have vanishing derivative.
      for (const auto& u : v2) {
        if (u.b != 1) return false;
        cert.family2.push_back(Family2Pair{u.line, u.a, 1});
      }
      return true;
    }
    std::string key = key_of(v1, v2);
    if (failed.count(key)) return false;

    Speh u = v1.front();
    std::vector<Speh> rest1(v1.begin() + 1, v1.end());

    // u together with its derivative u^-.
    {
      std::vector<Speh> q2 = v2;
      bool ok = true;
      if (u.b >= 2) ok = erase_one(q2, Speh(u.line, u.a, u.b - 1));
      if (ok && search(rest1, q2, cert)) {
        cert.family1.push_back(Family1Pair{u.line, u.a, u.b});
        return true;
      }
    }
    // u is the derivative of a second-side factor.
    {
      std::vector<Speh> q2 = v2;
      if (erase_one(q2, Speh(u.line, u.a, u.b + 1)) && search(rest1, q2, cert)) {
        cert.family2.push_back(Family2Pair{u.line, u.a, u.b + 1});
        return true;
      }
    }
    // u paired with the dual of its derivative, D(u^-).
    if (u.b >= 2) {
      std::vector<Speh> q2 = v2;
      if (erase_one(q2, arthur::az_dual(Speh(u.line, u.a, u.b - 1))) &&
          search(rest1, q2, cert)) {
        cert.family3.push_back(Family3Pair{u.line, u.a, u.b});
        return true;
      }
    }
    // u is the dual derivative D(w^-) of a second-side factor w.
    {
      Speh w(u.line, u.b, u.a + 1);  // w^- = u(b, a), D(w^-) = u(a, b)
      std::vector<Speh> q2 = v2;
      if (erase_one(q2, w) && search(rest1, q2, cert)) {
        cert.family4.push_back(Family4Pair{u.line, u.a + 1, u.b});
        return true;
      }
    }
    failed.insert(key);
    return false;
  }
};

}  // namespace

std::optional<RelevanceCertificate> strong_ext_relevant_rep(const ArthurRep& pi1,
                                                            const ArthurRep& pi2) {
  RepMatcher m;
  RelevanceCertificate cert;
  if (!m.search(pi1.factors(), pi2.factors(), cert)) return std::nullopt;
  cert.canonicalize();
  return cert;
}

bool certificate_validate(const RelevanceCertificate& cert, const ArthurParam& p1,
                          const ArthurParam& p2) {
  std::vector<ArthurSummand> side1, side2;
  for (const auto& p : cert.family1) {
    if (p.c < 1 || p.a < 1) return false;
    side1.push_back(ArthurSummand{p.line, p.c, p.a});
    if (p.a >= 2) side2.push_back(ArthurSummand{p.line, p.c, p.a - 1});
  }
  for (const auto& p : cert.family2) {
    if (p.c < 1 || p.b < 1) return false;
    side2.push_back(ArthurSummand{p.line, p.c, p.b});
    if (p.b >= 2) side1.push_back(ArthurSummand{p.line, p.c, p.b - 1});
  }
  for (const auto& p : cert.family3) {
    if (p.f < 1 || p.d < 1) return false;
    side1.push_back(ArthurSummand{p.line, p.f, p.d});
    if (p.d >= 2) side2.push_back(ArthurSummand{p.line, p.d - 1, p.f});
  }
  for (const auto& p : cert.family4) {
    if (p.e < 1 || p.f < 1) return false;
    side2.push_back(ArthurSummand{p.line, p.f, p.e});
    if (p.e >= 2) side1.push_back(ArthurSummand{p.line, p.e - 1, p.f});
  }
  std::sort(side1.begin(), side1.end(), arthur::summand_less);
  std::sort(side2.begin(), side2.end(), arthur::summand_less);
  return side1 == p1.summands() && side2 == p2.summands();
}

RelevanceCertificate swapped_dual(const RelevanceCertificate& cert) {
  RelevanceCertificate out;
  for (const auto& p : cert.family1)
    out.family2.push_back(Family2Pair{dual_line(p.line), p.c, p.a});
  for (const auto& p : cert.family2)
    out.family1.push_back(Family1Pair{dual_line(p.line), p.c, p.b});
  for (const auto& p : cert.family3)
    out.family4.push_back(Family4Pair{dual_line(p.line), p.d, p.f});
  for (const auto& p : cert.family4)
    out.family3.push_back(Family3Pair{dual_line(p.line), p.f, p.e});
  out.canonicalize();
  return out;
}

}  // namespace extbranch::relevance
