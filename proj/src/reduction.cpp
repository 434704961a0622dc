#include "extbranch/reduction.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace extbranch::reduction {

using arthur::ArthurParam;
using arthur::az_dual;
using arthur::contragredient;
using arthur::gl_size;
using arthur::param_of;
using relevance::RelevanceCertificate;
using segments::CuspidalLine;
using segments::in_integral_line;

const char* step_name(StepKind k) {
  switch (k) {
    case StepKind::TransferSwap: return "transfer-swap";
    case StepKind::MainReduction: return "main-reduction";
    case StepKind::BlockSelect: return "block-select";
    case StepKind::CaseA: return "case-a";
    case StepKind::CaseB_Duality: return "case-b-duality";
    case StepKind::GenericBase: return "generic-base";
  }
  return "?";
}

namespace {

const char* kJustTransfer = "transfer-equivalence";
const char* kJustReduction = "derivative-reduction";
const char* kJustBlock = "bernstein-block-selection";
const char* kJustCaseA = "matched-derivative-factor";
const char* kJustCaseB = "ext-duality-swap";
const char* kJustBase = "generic-hom-branching";

// Working form of a certificate: one record per family pair.
// family 1: (x,y) = (c,a); 2: (c,b); 3: (f,d); 4: (e,f).
struct WorkPair {
  int family = 1;
  CuspidalLine line;
  int x = 1;
  int y = 1;
};

std::vector<WorkPair> to_work(const RelevanceCertificate& cert) {
  std::vector<WorkPair> w;
  for (const auto& p : cert.family1) w.push_back({1, p.line, p.c, p.a});
  for (const auto& p : cert.family2) w.push_back({2, p.line, p.c, p.b});
  for (const auto& p : cert.family3) w.push_back({3, p.line, p.f, p.d});
  for (const auto& p : cert.family4) w.push_back({4, p.line, p.e, p.f});
  return w;
}

RelevanceCertificate from_work(const std::vector<WorkPair>& w) {
  RelevanceCertificate cert;
  for (const auto& p : w) {
    switch (p.family) {
      case 1: cert.family1.push_back({p.line, p.x, p.y}); break;
      case 2: cert.family2.push_back({p.line, p.x, p.y}); break;
      case 3: cert.family3.push_back({p.line, p.x, p.y}); break;
      case 4: cert.family4.push_back({p.line, p.x, p.y}); break;
    }
  }
  cert.canonicalize();
  return cert;
}

// The pair transform matching a side swap with contragredients:
// families 1<->2 and 3<->4, lines dualized, parameters carried over.
WorkPair swap_pair(const WorkPair& p) {
  WorkPair q;
  q.line = segments::dual_line(p.line);
  switch (p.family) {
    case 1: q.family = 2; q.x = p.x; q.y = p.y; break;  // (c,a) -> (c,b=a)
    case 2: q.family = 1; q.x = p.x; q.y = p.y; break;  // (c,b) -> (c,a=b)
    case 3: q.family = 4; q.x = p.y; q.y = p.x; break;  // (f,d) -> (e=d,f)
    case 4: q.family = 3; q.x = p.y; q.y = p.x; break;  // (e,f) -> (f,d=e)
  }
  return q;
}

std::vector<WorkPair> swap_work(const std::vector<WorkPair>& w) {
  std::vector<WorkPair> out;
  out.reserve(w.size());
  for (const auto& p : w) out.push_back(swap_pair(p));
  return out;
}

Speh sigma_factor(const CuspidalPoint& sigma) { return Speh(sigma.line, 1, 1); }

std::string block_label(const ArthurRep& rep) {
  // Multiset of lines in the cuspidal support, as a canonical string.
  std::vector<std::pair<std::string, int>> counts;
  for (const auto& pt : arthur::cuspidal_support(rep)) {
    if (!counts.empty() && counts.back().first == pt.line.id)
      ++counts.back().second;
    else
      counts.push_back({pt.line.id, 1});
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) os << '+';
    os << counts[i].first << 'x' << counts[i].second;
  }
  return os.str();
}

struct Builder {
  std::set<std::string> used;

  CuspidalPoint make_fresh(const ExtProblem& p, int degree) {
    CuspidalPoint pt = fresh_sigma_avoiding(p, degree, used);
    used.insert(pt.line.id);
    used.insert(pt.line.dual);
    return pt;
  }

  TraceNode build(ExtProblem problem, std::vector<WorkPair> work) {
    if (m_metric(problem.left, problem.right) == 0) {
      TraceNode leaf;
      leaf.problem = std::move(problem);
      leaf.step.kind = StepKind::GenericBase;
      leaf.step.justification = kJustBase;
      return leaf;
    }

    auto [side, top] = select_top_factor(problem.left, problem.right);
    if (side == Side::Right) {
      CuspidalPoint sigma = make_fresh(problem, 2);
      ExtProblem swapped;
      swapped.left = contragredient(problem.right);
      swapped.left.add(sigma_factor(sigma));
      swapped.right = contragredient(problem.left);
      std::vector<WorkPair> next = swap_work(work);
      next.push_back({1, sigma.line, 1, 1});

      TraceNode node;
      node.problem = std::move(problem);
      node.step.kind = StepKind::TransferSwap;
      node.step.justification = kJustTransfer;
      node.step.sigma = sigma;
      node.children.push_back(build(std::move(swapped), std::move(next)));
      return node;
    }

    // Peel the maximal factor u(a1, b1) from the left side.
    const int a1 = top.a;
    const int b1 = top.b;
    const int deg = top.line.degree;
    CuspidalPoint sigma = make_fresh(problem, deg * a1);
    const int n = gl_size(problem.left);
    const int target = n - deg * a1 * (b1 - 1) - 1;

    ReducedLeft red;
    if (b1 >= 2) red.head = Speh(top.line, a1, b1 - 1);
    red.sigma = sigma;
    red.tail = problem.left.without(top);
    red.restricted_to = target;

    // The certificate pair consuming the peeled factor decides the case.
    std::size_t idx = work.size();
    for (std::size_t i = 0; i < work.size(); ++i)
      if (work[i].family == 1 && work[i].line == top.line && work[i].x == a1 &&
          work[i].y == b1) { idx = i; break; }
    bool case_a = idx < work.size();
    if (!case_a)
      for (std::size_t i = 0; i < work.size(); ++i)
        if (work[i].family == 3 && work[i].line == top.line && work[i].x == a1 &&
            work[i].y == b1) { idx = i; break; }
    if (idx == work.size())
      throw std::logic_error("maximal factor not matched by families 1 or 3");

    std::optional<Speh> matched;
    if (case_a) {
      if (red.head) matched = *red.head;
    } else {
      matched = az_dual(*red.head);
    }
    ArthurRep right_rest = matched ? problem.right.without(*matched) : problem.right;

    std::vector<WorkPair> next = work;
    next.erase(next.begin() + static_cast<long>(idx));
    next.push_back({1, sigma.line, 1, 1});

    ExtProblem reduced_problem;
    reduced_problem.right = problem.right;
    reduced_problem.reduced = red;

    ExtProblem child;
    child.left = red.tail;
    child.left.add(sigma_factor(sigma));
    child.right = right_rest;

    TraceNode case_node;
    case_node.problem = reduced_problem;
    case_node.step.kind = case_a ? StepKind::CaseA : StepKind::CaseB_Duality;
    case_node.step.justification = case_a ? kJustCaseA : kJustCaseB;
    case_node.step.matched = matched;
    case_node.children.push_back(build(std::move(child), std::move(next)));

    TraceNode block_node;
    block_node.problem = reduced_problem;
    block_node.step.kind = StepKind::BlockSelect;
    block_node.step.justification = kJustBlock;
    block_node.step.block = block_label(right_rest);
    block_node.children.push_back(std::move(case_node));

    TraceNode node;
    node.problem = std::move(problem);
    node.step.kind = StepKind::MainReduction;
    node.step.justification = kJustReduction;
    node.step.sigma = sigma;
    node.step.peeled = top;
    node.step.restricted_to = target;
    node.children.push_back(std::move(block_node));
    return node;
  }
};

}  // namespace

int m_metric(const ArthurRep& pi1, const ArthurRep& pi2) {
  int m = 0;
  for (const Speh& u : pi1.factors())
    if (u.a * u.b > 1) ++m;
  for (const Speh& u : pi2.factors())
    if (u.a * u.b > 1) ++m;
  return m;
}

std::set<std::string> problem_line_ids(const ExtProblem& p) {
  std::set<std::string> ids;
  auto add_rep = [&ids](const ArthurRep& rep) {
    for (const Speh& u : rep.factors()) {
      ids.insert(u.line.id);
      ids.insert(u.line.dual);
    }
  };
  add_rep(p.left);
  add_rep(p.right);
  if (p.reduced) {
    if (p.reduced->head) {
      ids.insert(p.reduced->head->line.id);
      ids.insert(p.reduced->head->line.dual);
    }
    ids.insert(p.reduced->sigma.line.id);
    ids.insert(p.reduced->sigma.line.dual);
    add_rep(p.reduced->tail);
  }
  return ids;
}

CuspidalPoint fresh_sigma(const ExtProblem& problem, int degree) {
  return fresh_sigma_avoiding(problem, degree, {});
}

CuspidalPoint fresh_sigma_avoiding(const ExtProblem& problem, int degree,
                                   const std::set<std::string>& avoid) {
  std::set<std::string> taken = problem_line_ids(problem);
  taken.insert(avoid.begin(), avoid.end());
  for (int k = 1;; ++k) {
    std::string id = "aux" + std::to_string(k);
    if (taken.count(id) || taken.count(segments::dual_line_id(id))) continue;
    return CuspidalPoint{segments::make_line(id, degree), Rat(0)};
  }
}

std::pair<Side, Speh> select_top_factor(const ArthurRep& pi1, const ArthurRep& pi2) {
  if (pi1.empty() && pi2.empty())
    throw std::invalid_argument("select_top_factor on empty pair");
  const Speh* best = nullptr;
  Side best_side = Side::Left;
  auto consider = [&](const Speh& u, Side side) {
    if (!best) { best = &u; best_side = side; return; }
    int su = u.a + u.b, sb = best->a + best->b;
    if (su > sb || (su == sb && side == best_side && arthur::speh_less(u, *best))) {
      best = &u;
      best_side = side;
    }
  };
  for (const Speh& u : pi1.factors()) consider(u, Side::Left);
  for (const Speh& u : pi2.factors()) consider(u, Side::Right);
  return {best_side, *best};
}

BuildResult build_trace(const ArthurRep& pi1, const ArthurRep& pi2) {
  if (gl_size(pi1) != gl_size(pi2) + 1) return {BuildStatus::SizeMismatch, std::nullopt};
  auto cert = relevance::strong_ext_relevant_rep(pi1, pi2);
  if (!cert) return {BuildStatus::NotRelevant, std::nullopt};

  Builder builder;
  ExtProblem root;
  root.left = pi1;
  root.right = pi2;
  builder.used = problem_line_ids(root);
  TraceNode node = builder.build(root, to_work(*cert));
  return {BuildStatus::Ok, ReductionTrace{std::move(node)}};
}

namespace {

struct TraceChecker {
  Validation v;
  std::set<std::string> root_ids;
  std::set<std::string> sigma_ids;
  std::vector<WorkPair> collected;

  void collect(WorkPair p, int swap_depth) {
    if (swap_depth % 2 == 1) p = swap_pair(p);
    collected.push_back(p);
  }

  bool is_synthetic(const CuspidalLine& line) const {
    return sigma_ids.count(line.id) || sigma_ids.count(line.dual);
  }

  void check_sigma_fresh(const ExtProblem& problem, const CuspidalPoint& sigma,
                         const char* where) {
    std::set<std::string> ids = problem_line_ids(problem);
    if (ids.count(sigma.line.id))
      v.fail(std::string(where) + ": auxiliary cuspidal reuses line " + sigma.line.id);
    if (root_ids.count(sigma.line.id) || sigma_ids.count(sigma.line.id))
      v.fail(std::string(where) + ": auxiliary line " + sigma.line.id + " is not brand new");
    if (sigma.x != 0) v.fail(std::string(where) + ": auxiliary cuspidal must be unitary");
  }

  static std::vector<CuspidalPoint> shifted_support(const ArthurRep& rep, const Rat& s) {
    std::vector<CuspidalPoint> pts = arthur::cuspidal_support(rep);
    for (auto& p : pts) p.x += s;
    return pts;
  }

  void check_plain_sizes(const ExtProblem& p, const char* where) {
    if (p.is_reduced()) {
      v.fail(std::string(where) + ": expected a plain problem");
      return;
    }
    if (gl_size(p.left) != gl_size(p.right) + 1)
      v.fail(std::string(where) + ": sizes violate the restriction-pair constraint");
  }

  // round_m: metric of the plain problem opening the current round.
  // peeled: the factor removed by the enclosing main reduction, if any.
  void check_node(const TraceNode& node, int round_m, int swap_depth, int plain_count,
                  int root_m, const Speh* peeled_ctx = nullptr) {
    const ExtProblem& p = node.problem;
    switch (node.step.kind) {
      case StepKind::GenericBase: {
        check_plain_sizes(p, "generic-base");
        if (!node.children.empty()) v.fail("generic-base: leaf has children");
        if (m_metric(p.left, p.right) != 0)
          v.fail("generic-base: leaf with non-cuspidal factors");
        if (plain_count > root_m + 1) v.fail("trace deeper than the metric allows");
        for (const Speh& u : p.left.factors()) collect({1, u.line, u.a, u.b}, swap_depth);
        for (const Speh& u : p.right.factors()) collect({2, u.line, u.a, u.b}, swap_depth);
        return;
      }
      case StepKind::TransferSwap: {
        check_plain_sizes(p, "transfer-swap");
        if (node.children.size() != 1 || !node.step.sigma) {
          v.fail("transfer-swap: malformed node");
          return;
        }
        if (m_metric(p.left, p.right) == 0) v.fail("transfer-swap applied at the base case");
        auto [side, top] = select_top_factor(p.left, p.right);
        (void)top;
        if (side != Side::Right)
          v.fail("transfer-swap: maximal factor was not on the second side");
        const CuspidalPoint& sigma = *node.step.sigma;
        if (sigma.line.degree != 2) v.fail("transfer-swap: auxiliary degree must be 2");
        check_sigma_fresh(p, sigma, "transfer-swap");
        // sigma off the integral lines of nu^{-1/2} pi1^vee and of pi2.
        auto s1 = shifted_support(contragredient(p.left), Rat(-1, 2));
        if (in_integral_line(sigma, s1))
          v.fail("transfer-swap: auxiliary line meets the first-side support");
        auto s2 = arthur::cuspidal_support(p.right);
        if (in_integral_line(sigma, s2))
          v.fail("transfer-swap: auxiliary line meets the second-side support");
        sigma_ids.insert(sigma.line.id);
        sigma_ids.insert(sigma.line.dual);

        ExtProblem expect;
        expect.left = contragredient(p.right);
        expect.left.add(sigma_factor(sigma));
        expect.right = contragredient(p.left);
        const ExtProblem& child = node.children[0].problem;
        if (child.is_reduced() || !(child.left == expect.left) || !(child.right == expect.right))
          v.fail("transfer-swap: child problem is not the swapped pair");
        if (node.children[0].step.kind != StepKind::MainReduction)
          v.fail("transfer-swap: child step must be a main reduction");
        check_node(node.children[0], round_m, swap_depth + 1, plain_count, root_m);
        return;
      }
      case StepKind::MainReduction: {
        check_plain_sizes(p, "main-reduction");
        if (node.children.size() != 1 || !node.step.sigma || !node.step.peeled) {
          v.fail("main-reduction: malformed node");
          return;
        }
        const Speh& peeled = *node.step.peeled;
        if (!p.left.contains(peeled)) v.fail("main-reduction: peeled factor not present");
        for (const Speh& u : p.left.factors())
          if (u.a + u.b > peeled.a + peeled.b)
            v.fail("main-reduction: peeled factor not maximal on the first side");
        for (const Speh& u : p.right.factors())
          if (u.a + u.b > peeled.a + peeled.b)
            v.fail("main-reduction: peeled factor not maximal over the second side");
        const CuspidalPoint& sigma = *node.step.sigma;
        if (sigma.line.degree != peeled.line.degree * peeled.a)
          v.fail("main-reduction: auxiliary degree must match the peeled discrete block");
        check_sigma_fresh(p, sigma, "main-reduction");
        if (in_integral_line(sigma, arthur::cuspidal_support(p.left)))
          v.fail("main-reduction: auxiliary line meets the first-side support");
        CuspidalPoint shifted{sigma.line, sigma.x + Rat(1, 2)};
        if (in_integral_line(shifted, arthur::cuspidal_support(p.right)))
          v.fail("main-reduction: twisted auxiliary line meets the second-side support");
        sigma_ids.insert(sigma.line.id);
        sigma_ids.insert(sigma.line.dual);

        int n = gl_size(p.left);
        int target = n - peeled.line.degree * peeled.a * (peeled.b - 1) - 1;
        if (node.step.restricted_to != target)
          v.fail("main-reduction: recorded restriction size is wrong");

        const ExtProblem& child = node.children[0].problem;
        if (!child.is_reduced()) {
          v.fail("main-reduction: child must carry the symbolic restriction");
          return;
        }
        const ReducedLeft& red = *child.reduced;
        bool head_ok = peeled.b >= 2
                           ? (red.head && *red.head == Speh(peeled.line, peeled.a, peeled.b - 1))
                           : !red.head;
        if (!head_ok) v.fail("main-reduction: derivative head mismatch");
        if (!(red.sigma == sigma)) v.fail("main-reduction: auxiliary cuspidal mismatch");
        if (!(red.tail == p.left.without(peeled))) v.fail("main-reduction: tail mismatch");
        if (red.restricted_to != target) v.fail("main-reduction: restriction size mismatch");
        if (!(child.right == p.right)) v.fail("main-reduction: second side changed");
        int head_size = red.head ? red.head->size() : 0;
        if (head_size + target != gl_size(p.right))
          v.fail("main-reduction: size bookkeeping violated");
        if (gl_size(red.tail) + sigma.line.degree != target + 1)
          v.fail("main-reduction: restriction object size violated");
        if (node.children[0].step.kind != StepKind::BlockSelect)
          v.fail("main-reduction: child step must be block selection");
        check_node(node.children[0], m_metric(p.left, p.right), swap_depth, plain_count,
                   root_m, &peeled);
        return;
      }
      case StepKind::BlockSelect: {
        if (!p.is_reduced()) v.fail("block-select: expected the symbolic restriction");
        if (node.children.size() != 1) {
          v.fail("block-select: malformed node");
          return;
        }
        const TraceNode& case_node = node.children[0];
        if (case_node.step.kind != StepKind::CaseA &&
            case_node.step.kind != StepKind::CaseB_Duality) {
          v.fail("block-select: child step must be a case split");
          return;
        }
        const ExtProblem& cp = case_node.problem;
        if (!(cp.left == p.left) || !(cp.right == p.right) ||
            cp.is_reduced() != p.is_reduced())
          v.fail("block-select: problem must be unchanged");
        // The selected block is the class of the second side after the
        // matched factor splits off.
        ArthurRep rest = p.right;
        if (case_node.step.matched) {
          if (rest.contains(*case_node.step.matched))
            rest = rest.without(*case_node.step.matched);
        }
        if (node.step.block != block_label(rest))
          v.fail("block-select: recorded block label mismatch");
        check_node(case_node, round_m, swap_depth, plain_count, root_m, peeled_ctx);
        return;
      }
      case StepKind::CaseA:
      case StepKind::CaseB_Duality: {
        if (!p.is_reduced() || node.children.size() != 1) {
          v.fail("case-split: malformed node");
          return;
        }
        const ReducedLeft& red = *p.reduced;
        bool case_a = node.step.kind == StepKind::CaseA;
        std::optional<Speh> expect_matched;
        if (case_a) {
          if (red.head) expect_matched = *red.head;
        } else {
          if (!red.head) {
            v.fail("case-b: duality case needs a non-vanishing derivative head");
            return;
          }
          expect_matched = az_dual(*red.head);
        }
        if (node.step.matched != expect_matched)
          v.fail(case_a ? "case-a: matched factor must equal the derivative head"
                        : "case-b: matched factor must equal the dual of the head");
        ArthurRep right_rest = p.right;
        if (expect_matched) {
          if (!p.right.contains(*expect_matched)) {
            v.fail("case-split: matched factor not present on the second side");
          } else {
            right_rest = p.right.without(*expect_matched);
          }
        }
        ExtProblem expect_child;
        expect_child.left = red.tail;
        expect_child.left.add(sigma_factor(red.sigma));
        expect_child.right = right_rest;
        const ExtProblem& child = node.children[0].problem;
        if (child.is_reduced() || !(child.left == expect_child.left) ||
            !(child.right == expect_child.right))
          v.fail("case-split: child problem mismatch");
        int child_m = m_metric(child.left, child.right);
        if (child_m >= round_m) v.fail("case-split: metric did not strictly decrease");

        // Reassembly: the peeled pair in root coordinates.
        if (!peeled_ctx) {
          v.fail("case-split: missing the enclosing reduction's peeled record");
          return;
        }
        const Speh& peeled = *peeled_ctx;
        bool head_consistent = peeled.b >= 2
                                   ? (red.head &&
                                      *red.head == Speh(peeled.line, peeled.a, peeled.b - 1))
                                   : !red.head;
        if (!head_consistent)
          v.fail("case-split: derivative head inconsistent with the peeled factor");
        collect({case_a ? 1 : 3, peeled.line, peeled.a, peeled.b}, swap_depth);
        check_node(node.children[0], round_m, swap_depth, plain_count + 1, root_m);
        return;
      }
    }
  }
};

}  // namespace

Validation validate_trace(const ReductionTrace& trace) {
  TraceChecker checker;
  const ExtProblem& root = trace.root.problem;
  checker.root_ids = problem_line_ids(root);
  if (root.is_reduced()) {
    checker.v.fail("root problem must be plain");
    return checker.v;
  }
  if (gl_size(root.left) != gl_size(root.right) + 1)
    checker.v.fail("root sizes violate the restriction-pair constraint");
  int root_m = m_metric(root.left, root.right);
  checker.check_node(trace.root, root_m, 0, 1, root_m);
  if (!checker.v.ok) return checker.v;

  RelevanceCertificate cert = from_work(checker.collected);
  // Drop pairs living on synthetic auxiliary lines before comparing with
  // the root decomposition.
  auto strip = [&checker](auto& vec) {
    std::erase_if(vec, [&checker](const auto& p) { return checker.is_synthetic(p.line); });
  };
  strip(cert.family1);
  strip(cert.family2);
  strip(cert.family3);
  strip(cert.family4);
  if (!relevance::certificate_validate(cert, param_of(root.left), param_of(root.right)))
    checker.v.fail("peeled pairs do not reassemble a certificate for the root");
  return checker.v;
}

}  // namespace extbranch::reduction
