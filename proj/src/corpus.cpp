#include "nspec/corpus.hpp"

#include <random>
#include <set>

#include "nspec/hodge.hpp"
#include "nspec/newton.hpp"

namespace nspec {

namespace {

constexpr int kRetryCap = 1000;

Support draw(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> axial(2, 9);
  std::uniform_int_distribution<int> extra_count(0, 4);
  std::uniform_int_distribution<int> coord(0, 9);
  std::set<Point> pts;
  pts.insert({axial(rng), 0, 0});
  pts.insert({0, axial(rng), 0});
  pts.insert({0, 0, axial(rng)});
  int extras = extra_count(rng);
  for (int k = 0; k < extras; ++k) {
    Point p{coord(rng), coord(rng), coord(rng)};
    if (p == Point{0, 0, 0}) continue;
    pts.insert(p);
  }
  return Support::make(3, {pts.begin(), pts.end()});
}

}  // namespace

std::vector<Support> generate_corpus(std::uint64_t seed, int count) {
  std::vector<Support> out;
  std::mt19937_64 rng(seed);
  std::uint64_t reseed = seed;
  while (static_cast<int>(out.size()) < count) {
    bool found = false;
    for (int attempt = 0; attempt < kRetryCap && !found; ++attempt) {
      Support s = draw(rng);
      NewtonPolyhedron P(s);
      if (P.is_simplicial() && P.is_convenient()) {
        out.push_back(std::move(s));
        found = true;
      }
    }
    if (!found) rng.seed(++reseed ^ 0x9e3779b97f4a7c15ULL);
  }
  return out;
}

std::vector<Support> non_isolated_corpus(std::uint64_t seed, int count) {
  std::vector<Support> out;
  std::set<std::vector<Point>> seen;
  for (const Support& s : generate_corpus(seed, count)) {
    // Drop the axial points of every nonempty subset of axes.
    for (unsigned mask = 1; mask < 8; ++mask) {
      std::vector<Point> kept;
      for (const auto& p : s.points) {
        int nonzero = 0, axis = 0;
        for (int i = 0; i < 3; ++i) {
          if (p[i] != 0) {
            ++nonzero;
            axis = i;
          }
        }
        if (nonzero == 1 && (mask >> axis & 1)) continue;
        kept.push_back(p);
      }
      if (kept.empty() || !seen.insert(kept).second) continue;
      Support t = Support::make(3, kept);
      if (surface_hodge_hypotheses(t).empty()) out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace nspec
