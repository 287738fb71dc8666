#pragma once

#include <optional>
#include <vector>

#include "folia/birational.hpp"

namespace folia {

/// The line with the most singular points (clusters counted by size) among
/// lines through two rational points or carrying a whole cluster; ties go to
/// the first candidate in point order. Throws ValidationError ("already
/// reduced") for fewer than two points.
ProjectiveLine select_line(const std::vector<SingularRecord>& sing);

/// Singular points (clusters by size) on the line.
int count_on_line(const std::vector<SingularRecord>& sing, const ProjectiveLine& line);

/// A rational point of the line off Sing(F), where the line is not tangent
/// to the foliation unless it is invariant.
ProjectivePoint select_base_point(const FoliationForm& f, const ProjectiveLine& line);

struct LemmaStep {
  ProjectiveLine line;
  int on_line = 0;
  ProjectivePoint base_point;
  bool invariant = false;
  BirationalStep frame;
  BirationalStep quadratic;
  FoliationForm result;
  std::vector<SingularRecord> singular;
  DarbouxReport darboux;
};

/// Frame sending the line to z = 0 and the base point to (0:1:0), then phi.
/// Recomputes Sing of the result and throws InvariantBreach unless it has
/// count - n + 1 points with exactly one on z = 0.
LemmaStep lemma_step(const FoliationForm& f, const ProjectiveLine& line);
LemmaStep lemma_step(const FoliationForm& f, const ProjectiveLine& line, const std::vector<SingularRecord>& sing);

/// Maps a point of the step's result to the step's input (nullopt at the
/// indeterminacy point of phi).
std::optional<ProjectivePoint> map_to_input(const LemmaStep& step, const ProjectivePoint& p);

struct BijectionReport {
  bool ok = false;
  int input_off_line = 0;
  int output_off_line = 0;
  std::string detail;
};

/// Checks that singular points of the result off z = 0 map onto the input's
/// singular points off the chosen line with equal Milnor numbers.
BijectionReport check_bijection(const std::vector<SingularRecord>& input_sing, const LemmaStep& step);

struct ReductionTranscript {
  FoliationForm input;
  std::vector<SingularRecord> input_singular;
  DarbouxReport input_darboux;
  std::vector<LemmaStep> steps;
  FoliationForm final_form;
  std::vector<SingularRecord> final_singular;
};

struct ReduceOptions {
  int degree_ceiling = 64;
};

/// Carries the transcript up to the failing step.
class ReductionAborted : public AlgorithmAbort {
 public:
  ReductionAborted(const std::string& what, ReductionTranscript partial)
      : AlgorithmAbort(what), partial_(std::move(partial)) {}
  const ReductionTranscript& partial() const { return partial_; }

 private:
  ReductionTranscript partial_;
};

ReductionTranscript reduce(const FoliationForm& f, const ReduceOptions& opts = {});

/// Re-applies the recorded frames and maps to the input.
FoliationForm replay(const ReductionTranscript& t);

}  // namespace folia
