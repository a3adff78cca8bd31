#pragma once

// Built-in closed 3-manifold group presentations with their known invariants.

#include <alexinv/covers.hpp>
#include <alexinv/presentation.hpp>
#include <alexinv/smith.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace alexinv {

/// Where an expected value comes from.
enum class Provenance {
  Literature,  // stated for this manifold in the literature
  Computed,    // checked by an independent computation
  Elementary,  // immediate from the construction
};

std::string to_string(Provenance p);

template <class T>
struct Expected {
  T value;
  Provenance source;
};

struct CorpusEntry {
  std::string name;
  std::string description;
  Presentation presentation;
  std::optional<Expected<std::size_t>> b1;
  std::optional<Expected<std::vector<Integer>>> torsion;
  /// Normalized polynomial in the printer's format.
  std::optional<Expected<std::string>> delta;
};

CorpusEntry s1_x_s2();
CorpusEntry heisenberg();
CorpusEntry three_torus();
/// Mapping torus of the torus T^n with monodromy A:
///   < x1..xn, h | [xi, xj] (i < j), h xi h^-1 (x1^A1i ... xn^Ani)^-1 >.
/// Generators are x, y (n = 2), x, y, z (n = 3) or x1..xn, then h.
/// Throws PreconditionError unless |det A| = 1.
CorpusEntry mapping_torus(const IntMatrix& a, std::string name = "mapping-torus");
/// Free group on k generators. Throws std::invalid_argument for k < 1.
CorpusEntry connected_sum_s1s2(std::size_t k);

/// Every named entry, in listing order.
std::vector<CorpusEntry> all_entries();
std::vector<std::string> entry_names();
std::optional<CorpusEntry> find_entry(std::string_view name);

struct CorpusCover {
  std::string label;
  std::string entry;
  CoverMap cover;
};

/// Mod-p covers (p = 2, 3, 5), free abelian covers with one prime per
/// coordinate, and mixed-prime free abelian covers, keeping those of index at
/// most max_index.
std::vector<CorpusCover> corpus_covers(std::size_t max_index = kDefaultMaxIndex);

}  // namespace alexinv
