#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deadline.hpp"
#include "graph.hpp"
#include "pattern.hpp"

namespace gfree {

// Which upper bound on chi(H) + chi(complement) applies, and from where.
enum class NgBranch {
  FamilyPlusOne,      // the all-cycles family: ceil(n/2)+1
  TwoRegularPlusOne,  // single 2-regular pattern: ceil(n/2)+1
  CompletePlusOne,    // complete pattern outside the n = k*d grid: ceil(n/d)+1
  CriticalPlusOne,    // host or complement certified critical: ceil(n/d)+1
  RefinedPlusOne,     // complete pattern, n = k*d, a refinement holds: k+1
  GeneralPlusTwo,     // ceil(n/d)+2
  None,               // pattern has minimum degree 0: nothing proved
};

const char* ng_branch_name(NgBranch b);

// Refinements available when the pattern is K_{d+1} and n = k*d (k, d >= 3).
struct RefinedConditionReport {
  bool applicable = false;
  int k = 0;
  int d = 0;
  bool cond_critical = false;          // host or complement is critical
  bool cond_free_pair_subset = false;  // some 2d-set pattern-free both sides
  bool cond_girth_subset = false;      // some 2d-set with girth exactly 2d
  bool subsets_checked = false;        // subset search ran (n <= 14)
  bool any = false;
  int bound = 0;  // k+1 when a condition holds, else k+2
};

RefinedConditionReport check_refined_conditions(const Graph& h, int d,
                                                const Deadline& deadline = {});

struct NGRecord {
  std::string graph6;
  std::string pattern;
  int n = 0;
  int chi = 0;
  int chi_complement = 0;
  int sum = 0;
  NgBranch branch = NgBranch::GeneralPlusTwo;
  int bound = 0;
  int slack = 0;  // bound - sum; negative would mean a proved bound failed
  bool sharp = false;
  bool bound_ok = true;
  std::optional<RefinedConditionReport> refined;
};

NGRecord ng_sum(const Graph& h, const PatternSpec& pat,
                const Deadline& deadline = {});

struct WitnessResult {
  std::string name;
  NGRecord record;
  int expected_chi = 0;
  int expected_chi_complement = 0;
  int expected_sum = 0;
  bool ok = false;
};

// The published extremal constructions; every one must come out sharp.
std::vector<WitnessResult> witness_suite(const Deadline& deadline = {});

struct VerifyOptions {
  int jobs = 1;
  long time_limit_ms = 0;  // per (graph, pattern) item; 0 = unlimited
};

struct Violation {
  std::string graph6;
  std::string pattern;
  std::string check;
  std::string detail;
};

struct VerifyReport {
  long graphs = 0;
  long pairs = 0;
  std::vector<NGRecord> records;  // ordered by (graph6, pattern)
  std::vector<Violation> violations;        // proved inequalities only
  std::vector<Violation> ratio_violations;  // the unproved ratio bound
  std::vector<std::string> warnings;
  long sharp_count = 0;
  int max_slack = 0;
};

// Full audit of every (graph, pattern) pair: exactness bounds, critical
// cores, and both complement-sum branches. Deterministic output order
// regardless of `jobs`.
VerifyReport verify_corpus(std::vector<Graph> graphs,
                           const std::vector<PatternSpec>& pats,
                           const VerifyOptions& opts = {});

// One graph6 string per line; unreadable lines become warnings.
VerifyReport verify_graph6_text(std::string_view text,
                                const std::vector<PatternSpec>& pats,
                                const VerifyOptions& opts = {});

}  // namespace gfree
