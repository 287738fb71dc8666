#include "folia/reducer.hpp"

#include <algorithm>

#include "folia/poly_algorithms.hpp"

namespace folia {

namespace {

std::optional<ProjectiveLine> cluster_line(const PointCluster& c) {
  const int d = c.size();
  std::vector<std::array<Rational, 3>> rows(static_cast<std::size_t>(d));
  for (int i = 0; i < 3; ++i) {
    const auto coords = c.generic[i].coords();
    for (std::size_t k = 0; k < coords.size() && k < rows.size(); ++k) rows[k][static_cast<std::size_t>(i)] = coords[k];
  }
  std::optional<std::array<Scalar, 3>> first;
  for (const auto& r : rows) {
    std::array<Scalar, 3> v{Scalar(r[0]), Scalar(r[1]), Scalar(r[2])};
    if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) continue;
    if (!first) {
      first = v;
      continue;
    }
    const Scalar a = (*first)[1] * v[2] - (*first)[2] * v[1];
    const Scalar b = (*first)[2] * v[0] - (*first)[0] * v[2];
    const Scalar cc = (*first)[0] * v[1] - (*first)[1] * v[0];
    if (a.is_zero() && b.is_zero() && cc.is_zero()) continue;
    ProjectiveLine line(a, b, cc);
    if (!line.contains(c.generic.coords())) return std::nullopt;
    return line;
  }
  return std::nullopt;
}

bool record_on_line(const SingularRecord& r, const ProjectiveLine& line) { return line.contains(r.point().coords()); }

/// Characteristic polynomial over Q of an element of Q[t]/(p), in u.
MultiPoly charpoly(const Scalar& s) {
  const MultiPoly t = MultiPoly::variable(2, 0);
  const MultiPoly u = MultiPoly::variable(2, 1);
  if (s.field() == nullptr) return u - MultiPoly::constant(2, s);
  const auto& mp = s.field()->minpoly();
  MultiPoly p(2);
  for (std::size_t k = 0; k < mp.size(); ++k) p += t.pow(static_cast<unsigned>(k)).scaled(Scalar(mp[k]));
  MultiPoly a(2);
  const auto coords = s.coords();
  for (std::size_t k = 0; k < coords.size(); ++k) a += t.pow(static_cast<unsigned>(k)).scaled(Scalar(coords[k]));
  return canonical_associate(resultant(p, u - a, 0));
}

std::array<MultiPoly, 3> cluster_signature(const ProjectivePoint& p) {
  return {charpoly(p[0]), charpoly(p[1]), charpoly(p[0] + Scalar(3) * p[1] + Scalar(7) * p[2])};
}

}  // namespace

int count_on_line(const std::vector<SingularRecord>& sing, const ProjectiveLine& line) {
  int n = 0;
  for (const auto& r : sing)
    if (record_on_line(r, line)) n += r.size();
  return n;
}

ProjectiveLine select_line(const std::vector<SingularRecord>& sing) {
  if (distinct_count(sing) < 2) throw ValidationError("already reduced: fewer than two singular points");
  std::vector<ProjectiveLine> candidates;
  std::vector<const SingularRecord*> rational;
  for (const auto& r : sing)
    if (!r.is_cluster()) rational.push_back(&r);
  std::sort(rational.begin(), rational.end(), [](const auto* a, const auto* b) { return a->point() < b->point(); });
  for (std::size_t i = 0; i < rational.size(); ++i)
    for (std::size_t j = i + 1; j < rational.size(); ++j)
      candidates.push_back(ProjectiveLine::through(rational[i]->point().coords(), rational[j]->point().coords()));
  for (const auto& r : sing)
    if (r.is_cluster())
      if (auto l = cluster_line(std::get<PointCluster>(r.where))) candidates.push_back(*l);
  if (candidates.empty())
    throw AlgorithmAbort("no rational line carries two singular points; splitting a cluster is not supported");
  int best = -1;
  const ProjectiveLine* chosen = nullptr;
  for (const auto& l : candidates) {
    const int n = count_on_line(sing, l);
    if (n > best) {
      best = n;
      chosen = &l;
    }
  }
  return *chosen;
}

ProjectivePoint select_base_point(const FoliationForm& f, const ProjectiveLine& line) {
  const LineRestriction r = restrict_to_line(f, line);
  const bool invariant = r.tangency.is_zero();
  const auto span = line.spanning_points();
  const int scan = f.degree() + 3;
  for (int k = 0; k <= scan; ++k) {
    const Scalar s(k == scan ? 0 : 1);
    const Scalar t(k == scan ? 1 : k);
    std::array<Scalar, 3> p;
    for (int i = 0; i < 3; ++i) p[i] = s * span[0][i] + t * span[1][i];
    bool singular = true;
    for (const auto& c : f.coefficients())
      if (!c.evaluate(p).is_zero()) singular = false;
    if (singular) continue;
    if (!invariant && r.tangency.evaluate(std::array<Scalar, 2>{s, t}).is_zero()) continue;
    return ProjectivePoint(p);
  }
  throw AlgorithmAbort("no admissible base point among " + std::to_string(scan + 1) + " scanned points of " +
                       to_string(line));
}

LemmaStep lemma_step(const FoliationForm& f, const ProjectiveLine& line) {
  return lemma_step(f, line, singular_locus(f));
}

LemmaStep lemma_step(const FoliationForm& f, const ProjectiveLine& line, const std::vector<SingularRecord>& sing) {
  const int n = count_on_line(sing, line);
  if (n < 2)
    throw ValidationError("the line " + to_string(line) + " carries " + std::to_string(n) +
                          " singular point(s); at least two are needed");
  const int before = distinct_count(sing);
  const ProjectivePoint base = select_base_point(f, line);
  const LinearFrame frame = frame_for(line, base);
  BirationalStep fs = frame_step(f, frame);
  BirationalStep qs = map_step(fs.result, phi_map());
  auto after = singular_locus(qs.result);
  const ProjectiveLine z0(0, 0, 1);
  const int count = distinct_count(after);
  const int on_z0 = count_on_line(after, z0);
  LemmaStep step{line, n, base, is_line_invariant(f, line), fs, qs, qs.result, after, darboux_check(qs.result, after)};
  if (count != before - n + 1 || on_z0 != 1)
    throw InvariantBreach("lemma step on " + to_string(line) + " produced " + std::to_string(count) +
                          " singular points with " + std::to_string(on_z0) + " on z = 0; expected " +
                          std::to_string(before - n + 1) + " with 1");
  return step;
}

std::optional<ProjectivePoint> map_to_input(const LemmaStep& step, const ProjectivePoint& p) {
  auto q = apply_map(*step.quadratic.map, p);
  if (!q) return std::nullopt;
  return ProjectivePoint(step.frame.frame->apply(q->coords()));
}

BijectionReport check_bijection(const std::vector<SingularRecord>& input_sing, const LemmaStep& step) {
  BijectionReport rep;
  std::vector<const SingularRecord*> inputs;
  for (const auto& r : input_sing)
    if (!record_on_line(r, step.line)) {
      inputs.push_back(&r);
      rep.input_off_line += r.size();
    }
  std::vector<bool> used(inputs.size(), false);
  const ProjectiveLine z0(0, 0, 1);
  for (const auto& r : step.singular) {
    if (record_on_line(r, z0)) continue;
    rep.output_off_line += r.size();
    const auto mapped = map_to_input(step, r.point());
    if (!mapped) {
      rep.detail = "output point " + to_string(r) + " maps to indeterminacy";
      return rep;
    }
    bool matched = false;
    for (std::size_t i = 0; i < inputs.size() && !matched; ++i) {
      if (used[i] || inputs[i]->is_cluster() != r.is_cluster() || inputs[i]->size() != r.size()) continue;
      if (r.is_cluster()) {
        if (cluster_signature(*mapped) != cluster_signature(inputs[i]->point())) continue;
      } else if (!(*mapped == inputs[i]->point())) {
        continue;
      }
      if (inputs[i]->mu != r.mu) {
        rep.detail = "Milnor number changed at " + to_string(*mapped);
        return rep;
      }
      used[i] = true;
      matched = true;
    }
    if (!matched) {
      rep.detail = "output point " + to_string(r) + " has no partner off the line";
      return rep;
    }
  }
  rep.ok = rep.input_off_line == rep.output_off_line;
  if (!rep.ok) rep.detail = "off-line counts differ";
  return rep;
}

ReductionTranscript reduce(const FoliationForm& f, const ReduceOptions& opts) {
  ReductionTranscript t{f, singular_locus(f), {}, {}, f, {}};
  t.input_darboux = darboux_check(f, t.input_singular);
  FoliationForm current = f;
  std::vector<SingularRecord> sing = t.input_singular;
  const int limit = distinct_count(sing) - 1;
  try {
    while (distinct_count(sing) >= 2) {
      if (static_cast<int>(t.steps.size()) >= limit) throw InvariantBreach("reduction exceeded its step bound");
      const ProjectiveLine line = select_line(sing);
      const int next_degree = 2 * current.degree() + (is_line_invariant(current, line) ? 1 : 2);
      if (next_degree > opts.degree_ceiling)
        throw AlgorithmAbort("next step would reach degree " + std::to_string(next_degree) + ", above the ceiling " +
                             std::to_string(opts.degree_ceiling));
      LemmaStep step = lemma_step(current, line, sing);
      if (!step.darboux.ok) throw InvariantBreach("Darboux identity fails after a reduction step");
      current = step.result;
      sing = step.singular;
      t.steps.push_back(std::move(step));
    }
  } catch (const AlgorithmAbort& e) {
    t.final_form = current;
    t.final_singular = sing;
    throw ReductionAborted(e.what(), std::move(t));
  }
  t.final_form = current;
  t.final_singular = sing;
  return t;
}

FoliationForm replay(const ReductionTranscript& t) {
  FoliationForm f = t.input;
  for (const auto& s : t.steps) {
    f = apply_step(f, s.frame);
    f = apply_step(f, s.quadratic);
  }
  return f;
}

}  // namespace folia
