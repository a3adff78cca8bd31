// Reidemeister-Schreier rewriting for a kernel of a map onto a finite
// elementary abelian group. Cosets are deck-group elements, so the coset of a
// word is read off from its image and no coset enumeration is needed.

#include <alexinv/covers.hpp>
#include <alexinv/errors.hpp>

#include <deque>

namespace alexinv {

CoverPresentation reidemeister_schreier(const CoverMap& cm, std::size_t max_index) {
  const DeckGroup& deck = cm.deck();
  const std::size_t index = deck.order();
  if (index > max_index)
    throw ResourceLimitError("reidemeister_schreier: cover index " + std::to_string(index) +
                             " exceeds limit " + std::to_string(max_index));
  const Presentation& base = cm.base();
  const std::size_t n = base.generator_count();

  // forward[c][j] = coset of c * x_j, backward[c][j] = coset of c * x_j^-1.
  std::vector<std::vector<std::size_t>> forward(index, std::vector<std::size_t>(n));
  std::vector<std::vector<std::size_t>> backward(index, std::vector<std::size_t>(n));
  for (std::size_t c = 0; c < index; ++c) {
    const DeckElement g = deck.element_at(c);
    for (std::size_t j = 0; j < n; ++j) {
      forward[c][j] = deck.index_of(deck.add(g, cm.assignment()[j]));
      backward[c][j] = deck.index_of(deck.add(g, deck.negate(cm.assignment()[j])));
    }
  }

  // Breadth-first spanning tree. The edge labelled (c, j) joins c to c * x_j.
  std::vector<std::vector<bool>> tree_edge(index, std::vector<bool>(n, false));
  std::vector<bool> seen(index, false);
  std::vector<Word> transversal(index);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      for (int sign : {1, -1}) {
        const std::size_t next = sign > 0 ? forward[c][j] : backward[c][j];
        if (seen[next]) continue;
        seen[next] = true;
        tree_edge[sign > 0 ? c : next][j] = true;
        const Letter step{j, sign};
        transversal[next] = transversal[c] * reduce_word(std::span<const Letter>(&step, 1));
        queue.push_back(next);
      }
    }
  }

  constexpr std::size_t kTree = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> schreier(index, std::vector<std::size_t>(n, kTree));
  std::vector<std::string> names;
  for (std::size_t c = 0; c < index; ++c)
    for (std::size_t j = 0; j < n; ++j)
      if (!tree_edge[c][j]) {
        schreier[c][j] = names.size();
        names.push_back("s" + std::to_string(names.size() + 1));
      }

  std::vector<Word> relators;
  relators.reserve(index * base.relator_count());
  std::vector<Letter> rewritten;
  for (const Word& r : base.relators()) {
    for (std::size_t start = 0; start < index; ++start) {
      rewritten.clear();
      std::size_t c = start;
      for (const Letter& l : r.letters()) {
        const std::size_t from = l.exponent > 0 ? c : backward[c][l.generator];
        const std::size_t s = schreier[from][l.generator];
        if (s != kTree) rewritten.push_back(Letter{s, l.exponent});
        c = l.exponent > 0 ? forward[c][l.generator] : from;
      }
      relators.push_back(reduce_word(rewritten));
    }
  }
  return CoverPresentation{Presentation(std::move(names), std::move(relators)), std::move(transversal)};
}

}  // namespace alexinv
