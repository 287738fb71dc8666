#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "folia/text.hpp"

namespace testing_support {

inline folia::MultiPoly P(const std::string& s) { return folia::parse_polynomial(s); }
inline folia::MultiPoly P2(const std::string& s) { return folia::parse_polynomial(s, {}, {"u", "v"}); }
inline folia::MultiPoly P1(const std::string& s) { return folia::parse_polynomial(s, {}, {"t"}); }
inline folia::FoliationForm F(const std::string& s, const folia::ParamMap& p = {}) { return folia::parse_form(s, p); }

inline folia::FoliationForm lambda_example(long lambda) {
  return folia::parse_form("lambda*y*z dx + x*z dy - (1+lambda)*x*y dz", {{"lambda", folia::Rational(lambda)}});
}

struct CorpusEntry {
  std::string name;
  folia::FoliationForm form;
};

inline std::vector<CorpusEntry> corpus() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(FOLIA_CORPUS_DIR))
    if (e.path().extension() == ".form") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& p : files) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    out.push_back({p.filename().string(), folia::parse_form(ss.str())});
  }
  return out;
}

/// Random polynomial with small integer coefficients.
inline folia::MultiPoly random_poly(std::mt19937& rng, int arity, int max_degree, int terms) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> deg(0, max_degree);
  folia::MultiPoly out(arity);
  for (int i = 0; i < terms; ++i) {
    std::array<unsigned, 3> e{0, 0, 0};
    int budget = deg(rng);
    for (int v = 0; v < arity && budget > 0; ++v) {
      std::uniform_int_distribution<int> part(0, budget);
      const int k = v == arity - 1 ? budget : part(rng);
      e[static_cast<std::size_t>(v)] = static_cast<unsigned>(k);
      budget -= k;
    }
    out += folia::MultiPoly::monomial(arity, e, folia::Scalar(coef(rng)));
  }
  return out;
}

}  // namespace testing_support
