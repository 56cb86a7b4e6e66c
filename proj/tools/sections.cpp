#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "cli.hpp"
#include "coxkit/amalgam.hpp"
#include "coxkit/crysto.hpp"
#include "coxkit/diagram.hpp"

namespace coxkit::cli {

namespace {

using diagram::CoxeterMatrix;
using diagram::Family;
using diagram::Kind;

CoxeterMatrix triangle(diagram::Label p, diagram::Label q, diagram::Label r) {
  CoxeterMatrix m(3);
  m.set(0, 1, p);
  m.set(1, 2, q);
  m.set(0, 2, r);
  return m;
}

CoxeterMatrix shuffled(const CoxeterMatrix& m, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(m.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return m.relabeled(perm);
}

bool is_single(const diagram::ClassificationResult& r, Kind kind, const Family& f) {
  return r.components.size() == 1 && r.global == kind && r.components[0].kind == kind && r.components[0].family == f;
}

}  // namespace

report::VerificationReport verify_classification(std::uint64_t seed) {
  report::VerificationReport rep;
  rep.section = "classification";
  std::mt19937_64 rng(seed);

  const auto d333 = diagram::classify(triangle(3, 3, 3)).summary();
  rep.add("Delta(3,3,3) is affine of type ~A2", d333 == "Affine(Ã₂)", d333);
  const auto d237 = diagram::classify(triangle(2, 3, 7)).summary();
  rep.add("the (2,3,7) triangle diagram is neither spherical nor affine", d237 == "Other", d237);
  rep.add("triangle trichotomy (2,3,5) (3,3,3) (2,3,7)",
          diagram::classify_triangle(2, 3, 5) == Kind::Spherical && diagram::classify_triangle(3, 3, 3) == Kind::Affine &&
              diagram::classify_triangle(2, 3, 7) == Kind::Other);

  struct Range {
    char letter;
    std::size_t lo, hi;
  };
  const Range affine[] = {{'A', 1, 10}, {'B', 3, 10}, {'C', 2, 10}, {'D', 4, 10}, {'E', 6, 8}, {'F', 4, 4}, {'G', 2, 2}};
  std::size_t total = 0;
  std::string bad;
  for (const auto& r : affine)
    for (std::size_t n = r.lo; n <= r.hi; ++n) {
      const Family f{r.letter, n, true, 0};
      const auto m = diagram::affine_diagram(r.letter, n);
      for (const auto& cand : {m, shuffled(m, rng)}) {
        ++total;
        if (!is_single(diagram::classify(cand), Kind::Affine, f)) bad += " " + f.ascii();
      }
    }
  rep.add("every affine catalog diagram of rank <= 10 classifies as itself", bad.empty(),
          std::to_string(total) + " diagrams (each also relabeled)" + (bad.empty() ? "" : "; mismatches:" + bad));

  const Range finite[] = {{'A', 1, 10}, {'B', 2, 10}, {'D', 4, 10}, {'E', 6, 8}, {'F', 4, 4}, {'G', 2, 2}, {'H', 3, 4}};
  total = 0;
  bad.clear();
  for (const auto& r : finite)
    for (std::size_t n = r.lo; n <= r.hi; ++n) {
      const Family f{r.letter, n, false, 0};
      const auto m = diagram::finite_diagram(r.letter, n);
      for (const auto& cand : {m, shuffled(m, rng)}) {
        ++total;
        if (!is_single(diagram::classify(cand), Kind::Spherical, f)) bad += " " + f.ascii();
      }
    }
  for (diagram::Label p : {5u, 7u, 8u, 9u, 12u}) {
    ++total;
    if (!is_single(diagram::classify(diagram::finite_diagram('I', 2, p)), Kind::Spherical, Family{'I', 2, false, p}))
      bad += " I2(" + std::to_string(p) + ")";
  }
  rep.add("every finite catalog diagram of rank <= 10 classifies as itself", bad.empty(),
          std::to_string(total) + " diagrams" + (bad.empty() ? "" : "; mismatches:" + bad));
  return rep;
}

report::VerificationReport verify_brink(std::uint64_t seed) {
  report::VerificationReport rep;
  rep.section = "brink";

  const auto a2 = diagram::centralizer_rank(diagram::affine_diagram('A', 2), 0);
  rep.add("~A2 at s1: commuting set {s1}, free rank 1", a2.commuting == std::vector<std::size_t>{0} && a2.free_rank == 1,
          "commuting size " + std::to_string(a2.commuting.size()) + ", e = " + std::to_string(a2.edges) +
              ", v = " + std::to_string(a2.vertices) + ", k = " + std::to_string(a2.free_rank));

  std::string detail;
  bool ok = true;
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto r = diagram::centralizer_rank(diagram::affine_diagram('A', n), n - 1);
    ok = ok && r.free_rank == 1;
    detail += (detail.empty() ? "" : ", ") + std::string("~A") + std::to_string(n) + ": k = " + std::to_string(r.free_rank);
  }
  rep.add("~A_n (3 <= n <= 8) at s_n has free rank 1", ok, detail);

  std::mt19937_64 rng(seed);
  const diagram::Label labels[] = {2, 4, 6, 8, diagram::kInfinity};
  ok = true;
  std::size_t count = 0;
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng() % 7;
    CoxeterMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, labels[rng() % std::size(labels)]);
    for (std::size_t s = 0; s < n; ++s) {
      ++count;
      ok = ok && diagram::is_even(m) && diagram::centralizer_rank(m, s).free_rank == 0;
    }
  }
  rep.add("random even diagrams have free rank 0 at every generator", ok, std::to_string(count) + " generators checked");
  return rep;
}

const std::vector<std::string>& section_names() {
  static const std::vector<std::string> names = {"a2tilde", "amalgam", "wlog", "classification", "brink"};
  return names;
}

report::VerificationReport verify_section(const std::string& name, std::uint64_t seed) {
  if (name == "a2tilde") return crysto::verify_a2_phi();
  if (name == "amalgam") return amalgam::verify_amalgam_counterexample(seed);
  if (name == "wlog") return crysto::verify_complement_swap(seed);
  if (name == "classification") return verify_classification(seed);
  if (name == "brink") return verify_brink(seed);
  throw std::invalid_argument("unknown section '" + name + "'");
}

}  // namespace coxkit::cli
