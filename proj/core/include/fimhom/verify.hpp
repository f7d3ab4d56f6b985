#pragma once

#include "fimhom/presentation.hpp"
#include "fimhom/tree.hpp"

namespace fimhom {

enum class Verdict { Pass, Fail, Skip };

struct CheckLine {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::string detail;
};

struct VerifyCase {
  std::string label;
  std::vector<CheckLine> checks;
};

struct VerifyReport {
  std::vector<VerifyCase> cases;
  int pass = 0;
  int fail = 0;
  int skip = 0;

  void tally();
};

/// The full per-module property suite: module validity, four-term exactness,
/// the degree and torsion laws, filtration, the recursive regularity
/// inequality, tree termination and descent, kernel/cokernel closure of a
/// random map, and the resolution alternating-sum oracle. Checks whose
/// hypotheses touch the truncation shell come back as Skip, never as Fail.
std::vector<CheckLine> verify_module(const PointwiseModule& V, u64 map_seed, int smax);

struct RandomVerifyConfig {
  int m = 1;
  Obj bounds;
  u32 p = 3;
  int count = 10;
  u64 seed = 1;
  int smax = 2;
};

VerifyReport run_verify_random(const RandomVerifyConfig& cfg);
VerifyReport run_verify_presentation(const Presentation& P, int smax);

}  // namespace fimhom
