#ifndef EXTBRANCH_REDUCTION_HPP
#define EXTBRANCH_REDUCTION_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "extbranch/arthur.hpp"
#include "extbranch/relevance.hpp"

namespace extbranch::reduction {

using arthur::ArthurRep;
using arthur::CuspidalPoint;
using arthur::Speh;

// Symbolic form of head x (sigma x tail)|_{G_a}: the derivative head, the
// fresh auxiliary cuspidal, the untouched factors, and the subgroup size
// the product is restricted to. Never expanded; consumed only by the block
// selection and the recursive call.
struct ReducedLeft {
  std::optional<Speh> head;  // vanishes when the peeled factor had b = 1
  CuspidalPoint sigma;
  ArthurRep tail;
  int restricted_to = 0;
};

// A single Ext non-vanishing claim. Plain problems pair two products with
// sizes (k, k-1); between a reduction and its case split the left side is
// the symbolic restriction object instead.
struct ExtProblem {
  ArthurRep left;
  ArthurRep right;
  std::optional<ReducedLeft> reduced;

  bool is_reduced() const { return reduced.has_value(); }
};

enum class StepKind {
  TransferSwap,
  MainReduction,
  BlockSelect,
  CaseA,
  CaseB_Duality,
  GenericBase,
};

const char* step_name(StepKind k);

struct ReductionStep {
  StepKind kind = StepKind::GenericBase;
  std::string justification;
  std::optional<CuspidalPoint> sigma;  // TransferSwap, MainReduction
  std::optional<Speh> peeled;          // MainReduction
  std::optional<Speh> matched;         // CaseA (may be absent), CaseB
  int restricted_to = -1;              // MainReduction
  std::string block;                   // BlockSelect
};

struct TraceNode {
  ExtProblem problem;
  ReductionStep step;
  std::vector<TraceNode> children;  // empty exactly for GenericBase
};

struct ReductionTrace {
  TraceNode root;
};

// Number of non-cuspidal factors across both sides; the induction metric.
int m_metric(const ArthurRep& pi1, const ArthurRep& pi2);

// All line ids occurring in the problem, including duals.
std::set<std::string> problem_line_ids(const ExtProblem& p);

// A point on a brand-new line of the requested degree; both support
// freshness conditions hold by construction.
CuspidalPoint fresh_sigma(const ExtProblem& problem, int degree);
CuspidalPoint fresh_sigma_avoiding(const ExtProblem& problem, int degree,
                                   const std::set<std::string>& avoid);

enum class Side { Left, Right };

// The factor maximizing a + b over both sides; ties resolve to the left
// side, then by canonical factor order. Throws if both sides are empty.
std::pair<Side, Speh> select_top_factor(const ArthurRep& pi1, const ArthurRep& pi2);

enum class BuildStatus { Ok, NotRelevant, SizeMismatch };

struct BuildResult {
  BuildStatus status = BuildStatus::Ok;
  std::optional<ReductionTrace> trace;
};

// Replays the inductive argument: transfer swaps to put the maximal factor
// on the left, derivative reduction with a fresh cuspidal, block selection,
// the case split read off the relevance certificate, and a generic base
// leaf once every factor is cuspidal.
BuildResult build_trace(const ArthurRep& pi1, const ArthurRep& pi2);

struct Validation {
  bool ok = true;
  std::vector<std::string> violations;

  void fail(std::string why) {
    ok = false;
    violations.push_back(std::move(why));
  }
};

// Independent re-verification of every side condition in a trace,
// including reassembling the peeled pairs into a certificate for the root.
Validation validate_trace(const ReductionTrace& trace);

}  // namespace extbranch::reduction

#endif
