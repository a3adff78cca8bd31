#include <alexinv/corpus.hpp>
#include <alexinv/errors.hpp>

#include <algorithm>
#include <stdexcept>

namespace alexinv {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Literature: return "literature";
    case Provenance::Computed: return "computed";
    case Provenance::Elementary: return "elementary";
  }
  return "elementary";
}

CorpusEntry s1_x_s2() {
  return {"s1xs2",
          "S^1 x S^2",
          parse_presentation("<x | >"),
          Expected<std::size_t>{1, Provenance::Literature},
          Expected<std::vector<Integer>>{{}, Provenance::Elementary},
          Expected<std::string>{"1", Provenance::Literature}};
}

CorpusEntry heisenberg() {
  return {"heisenberg",
          "Heisenberg nilmanifold",
          parse_presentation("<x,y,z | Z*[x,y], [x,z], [y,z]>"),
          Expected<std::size_t>{2, Provenance::Literature},
          Expected<std::vector<Integer>>{{}, Provenance::Computed},
          Expected<std::string>{"1", Provenance::Literature}};
}

CorpusEntry three_torus() {
  return {"t3",
          "3-torus",
          parse_presentation("<x,y,z | [x,y], [x,z], [y,z]>"),
          Expected<std::size_t>{3, Provenance::Literature},
          Expected<std::vector<Integer>>{{}, Provenance::Elementary},
          Expected<std::string>{"1", Provenance::Literature}};
}

CorpusEntry mapping_torus(const IntMatrix& a, std::string name) {
  if (a.rows() != a.cols() || a.rows() == 0) throw std::invalid_argument("mapping_torus: need a square matrix");
  if (abs_value(determinant(a)) != 1) throw PreconditionError("mapping_torus: monodromy must have determinant +-1");
  const std::size_t n = a.rows();
  std::vector<std::string> names;
  if (n == 2)
    names = {"x", "y"};
  else if (n == 3)
    names = {"x", "y", "z"};
  else
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  names.push_back("h");
  const std::size_t h = n;

  auto letter = [](std::size_t g, int e) {
    const Letter l{g, e};
    return reduce_word(std::span<const Letter>(&l, 1));
  };
  std::vector<Word> relators;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) relators.push_back(commutator(letter(i, 1), letter(j, 1)));
  for (std::size_t i = 0; i < n; ++i) {
    Word image;
    for (std::size_t k = 0; k < n; ++k) image = image * generator_power(k, a(k, i).get_si());
    relators.push_back(letter(h, 1) * letter(i, 1) * letter(h, -1) * image.inverse());
  }
  return {std::move(name), "mapping torus of T^" + std::to_string(n),
          Presentation(std::move(names), std::move(relators)), std::nullopt, std::nullopt, std::nullopt};
}

CorpusEntry connected_sum_s1s2(std::size_t k) {
  if (k < 1) throw std::invalid_argument("connected_sum_s1s2: k must be at least 1");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back("x" + std::to_string(i + 1));
  return {"connected-sum-" + std::to_string(k),
          "connected sum of " + std::to_string(k) + " copies of S^1 x S^2",
          Presentation(std::move(names), {}),
          Expected<std::size_t>{k, Provenance::Elementary},
          Expected<std::vector<Integer>>{{}, Provenance::Elementary},
          Expected<std::string>{k == 1 ? "1" : "0", Provenance::Elementary}};
}

namespace {

IntMatrix matrix2(long a, long b, long c, long d) {
  IntMatrix m(2, 2, 0);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

CorpusEntry mapping_torus_a() {
  CorpusEntry e = mapping_torus(matrix2(3, 2, 1, 1), "mapping-torus-A");
  e.description = "mapping torus of T^2 with monodromy [[3,2],[1,1]]";
  e.b1 = Expected<std::size_t>{1, Provenance::Literature};
  e.torsion = Expected<std::vector<Integer>>{{Integer(2)}, Provenance::Literature};
  e.delta = Expected<std::string>{"t^2 - 4*t + 1", Provenance::Literature};
  return e;
}

CorpusEntry mapping_torus_b() {
  CorpusEntry e = mapping_torus(matrix2(2, 1, 1, 1), "mapping-torus-B");
  e.description = "mapping torus of T^2 with monodromy [[2,1],[1,1]]";
  e.b1 = Expected<std::size_t>{1, Provenance::Computed};
  e.torsion = Expected<std::vector<Integer>>{{}, Provenance::Computed};
  e.delta = Expected<std::string>{"t^2 - 3*t + 1", Provenance::Computed};
  return e;
}

}  // namespace

std::vector<CorpusEntry> all_entries() {
  return {s1_x_s2(),          heisenberg(),          three_torus(),         mapping_torus_a(),
          mapping_torus_b(),  connected_sum_s1s2(2), connected_sum_s1s2(4), connected_sum_s1s2(5)};
}

std::vector<std::string> entry_names() {
  std::vector<std::string> out;
  for (const auto& e : all_entries()) out.push_back(e.name);
  return out;
}

std::optional<CorpusEntry> find_entry(std::string_view name) {
  for (auto& e : all_entries())
    if (e.name == name) return e;
  return std::nullopt;
}

namespace {

std::string prime_list(const std::vector<unsigned>& primes) {
  std::string s;
  for (std::size_t i = 0; i < primes.size(); ++i) s += (i ? "," : "") + std::to_string(primes[i]);
  return s;
}

}  // namespace

std::vector<CorpusCover> corpus_covers(std::size_t max_index) {
  std::vector<CorpusCover> out;
  auto add = [&](const std::string& label, const CorpusEntry& e, CoverMap cm) {
    if (cm.deck().order() > max_index) return;
    for (const auto& existing : out)
      if (existing.entry == e.name && existing.cover.deck() == cm.deck() &&
          existing.cover.assignment() == cm.assignment())
        return;
    out.push_back({label, e.name, std::move(cm)});
  };

  for (const auto& e : all_entries()) {
    const AbelianizationData ab = abelianize(e.presentation);
    for (unsigned p : {2u, 3u, 5u})
      if (mod_p_betti(e.presentation, p) > 0) add(e.name + "/mod-" + std::to_string(p), e, mod_p_cover(e.presentation, p));
    if (ab.rank == 0) continue;
    for (unsigned p : {2u, 3u, 5u}) {
      const std::vector<unsigned> primes(ab.rank, p);
      add(e.name + "/free-" + prime_list(primes), e, free_abelian_cover(e.presentation, primes));
    }
    if (ab.rank >= 2) {
      std::vector<unsigned> primes;
      for (std::size_t i = 0; i < ab.rank; ++i) primes.push_back(i % 2 == 0 ? 2 : 3);
      add(e.name + "/free-" + prime_list(primes), e, free_abelian_cover(e.presentation, primes));
    }
  }
  return out;
}

}  // namespace alexinv
