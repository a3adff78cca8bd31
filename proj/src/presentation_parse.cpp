#include <alexinv/errors.hpp>
#include <alexinv/presentation.hpp>

#include <cctype>
#include <map>

namespace alexinv {
namespace {

constexpr long kMaxWordPower = 100000;

class PresentationParser {
 public:
  explicit PresentationParser(std::string_view text) : text_(strip_comments(text)) {}

  Presentation parse() {
    expect('<');
    std::vector<std::string> names;
    skip_space();
    if (!peek('|')) {
      names.push_back(generator_name());
      while (consume(',')) names.push_back(generator_name());
    }
    expect('|');

    std::vector<Word> relators;
    skip_space();
    if (!peek('>')) {
      relators.push_back(relator());
      while (consume(',')) relators.push_back(relator());
    }
    expect('>');
    skip_space();
    if (pos_ < text_.size()) throw ParseError("trailing characters after presentation", pos_);
    return Presentation(std::move(names), std::move(relators));
  }

 private:
  static std::string strip_comments(std::string_view text) {
    std::string out(text);
    bool in_comment = false;
    for (char& c : out) {
      if (c == '\n') in_comment = false;
      if (c == '#') in_comment = true;
      if (in_comment) c = ' ';
    }
    return out;
  }

  std::string generator_name() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::islower(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected generator name (lowercase letter, optional digits)", pos_);
    ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    if (index_.count(name)) throw ParseError("duplicate generator '" + name + "'", start);
    index_.emplace(name, index_.size());
    return name;
  }

  // relator := word ('=' word)?
  Word relator() {
    Word lhs = word();
    if (consume('=')) return lhs * word().inverse();
    return lhs;
  }

  // word := item ('*'? item)*
  Word word() {
    Word acc = item();
    while (true) {
      skip_space();
      if (consume('*')) {
        acc = acc * item();
        continue;
      }
      if (starts_item()) {
        acc = acc * item();
        continue;
      }
      return acc;
    }
  }

  bool starts_item() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isalpha(static_cast<unsigned char>(c)) || c == '[' || c == '(' || c == '1';
  }

  // item := atom ('^' integer)?
  Word item() {
    Word base = atom();
    if (!consume('^')) return base;
    skip_space();
    const std::size_t where = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) negative = text_[pos_++] == '-';
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer exponent", pos_);
    if (pos_ - start > 7) throw ParseError("exponent too large", where);
    long power = std::stol(text_.substr(start, pos_ - start));
    if (power > kMaxWordPower) throw ParseError("exponent too large", where);
    if (negative) base = base.inverse();
    std::vector<Letter> letters;
    letters.reserve(base.length() * static_cast<std::size_t>(power));
    for (long k = 0; k < power; ++k)
      letters.insert(letters.end(), base.letters().begin(), base.letters().end());
    return reduce_word(letters);
  }

  Word atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '1') {
      ++pos_;
      return Word();
    }
    if (c == '(') {
      ++pos_;
      Word inner = word();
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos_;
      Word a = word();
      expect(',');
      Word b = word();
      expect(']');
      return commutator(a, b);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      const bool inverse = std::isupper(static_cast<unsigned char>(c));
      name[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(name[0])));
      auto it = index_.find(name);
      if (it == index_.end()) throw ParseError("unknown generator '" + name + "'", start);
      const Letter letter{it->second, inverse ? -1 : 1};
      return reduce_word(std::span<const Letter>(&letter, 1));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool consume(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!consume(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
  }

  std::string text_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> index_;
};

}  // namespace

Presentation parse_presentation(std::string_view text) { return PresentationParser(text).parse(); }

}  // namespace alexinv
