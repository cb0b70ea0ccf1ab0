#include "amalgam/word.hpp"

#include <cctype>
#include <ostream>

#include "amalgam/errors.hpp"

namespace amalgam {

Alphabet::Alphabet(int rank) : rank_(rank) {
  if (rank < 1) throw DomainError("alphabet rank must be at least 1, got " + std::to_string(rank));
}

Word Word::generator(Alphabet alphabet, int index) {
  if (index < 1 || index > alphabet.rank())
    throw DomainError("generator index " + std::to_string(index) + " out of range");
  return Word(alphabet.rank(), {index});
}

Word Word::letter(Alphabet alphabet, Letter l) {
  if (!alphabet.contains(l)) throw DomainError("letter " + std::to_string(l) + " out of range");
  return Word(alphabet.rank(), {l});
}

Word Word::slice(std::size_t begin, std::size_t end) const {
  return Word(rank_, std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(begin),
                                         letters_.begin() + static_cast<std::ptrdiff_t>(end)));
}

std::strong_ordering operator<=>(const Word& u, const Word& v) {
  if (u.rank_ != v.rank_) return u.rank_ <=> v.rank_;
  if (u.length() != v.length()) return u.length() <=> v.length();
  for (std::size_t i = 0; i < u.length(); ++i) {
    if (u[i] != v[i]) return slot_of(u[i]) <=> slot_of(v[i]);
  }
  return std::strong_ordering::equal;
}

Word reduce(std::span<const Letter> raw, Alphabet alphabet) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter l : raw) {
    if (!alphabet.contains(l))
      throw DomainError("letter " + std::to_string(l) + " outside alphabet of rank " +
                        std::to_string(alphabet.rank()));
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(alphabet.rank(), std::move(out));
}

Word mul(const Word& u, const Word& v) {
  if (u.rank_ != v.rank_)
    throw DomainError("rank mismatch: " + std::to_string(u.rank_) + " vs " + std::to_string(v.rank_));
  std::size_t cancel = 0;
  const std::size_t limit = std::min(u.length(), v.length());
  while (cancel < limit && u.letters_[u.length() - 1 - cancel] == -v.letters_[cancel]) ++cancel;
  std::vector<Letter> out;
  out.reserve(u.length() + v.length() - 2 * cancel);
  out.insert(out.end(), u.letters_.begin(), u.letters_.end() - static_cast<std::ptrdiff_t>(cancel));
  out.insert(out.end(), v.letters_.begin() + static_cast<std::ptrdiff_t>(cancel), v.letters_.end());
  return Word(u.rank_, std::move(out));
}

Word inv(const Word& u) {
  std::vector<Letter> out(u.letters_.rbegin(), u.letters_.rend());
  for (Letter& l : out) l = -l;
  return Word(u.rank_, std::move(out));
}

Word commutator(const Word& u, const Word& v) { return mul(mul(inv(u), inv(v)), mul(u, v)); }

Word conjugate(const Word& w, const Word& g) { return mul(mul(inv(g), w), g); }

Word power(const Word& w, long exponent) {
  Word base = exponent < 0 ? inv(w) : w;
  Word out(w.alphabet());
  for (long i = 0, n = exponent < 0 ? -exponent : exponent; i < n; ++i) out = mul(out, base);
  return out;
}

Word substitute(const Word& w, std::span<const Word> images, Alphabet target) {
  if (static_cast<int>(images.size()) < w.rank())
    throw DomainError("substitution needs one image per generator");
  Word out(target);
  for (Letter l : w.letters()) {
    const Word& img = images[static_cast<std::size_t>(generator_of(l) - 1)];
    out = mul(out, l > 0 ? img : inv(img));
  }
  return out;
}

Word parse_word(std::string_view text, Alphabet alphabet) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skip_space();
    if (i >= text.size()) break;
    char ch = text[i];
    if (ch == '1') {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(ch)))
      throw ParseError("unexpected character '" + std::string(1, ch) + "' in word \"" +
                       std::string(text) + "\"");
    const bool upper = std::isupper(static_cast<unsigned char>(ch)) != 0;
    const int gen = std::tolower(static_cast<unsigned char>(ch)) - 'a' + 1;
    if (gen > alphabet.rank())
      throw ParseError("letter '" + std::string(1, ch) + "' exceeds rank " +
                       std::to_string(alphabet.rank()));
    ++i;
    long exponent = 1;
    skip_space();
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_space();
      bool negative = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("missing exponent in word \"" + std::string(text) + "\"");
      exponent = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        exponent = exponent * 10 + (text[i] - '0');
        if (exponent > 1'000'000) throw ParseError("exponent too large");
        ++i;
      }
      if (negative) exponent = -exponent;
    }
    Letter l = upper ? -gen : gen;
    if (exponent < 0) {
      l = -l;
      exponent = -exponent;
    }
    raw.insert(raw.end(), static_cast<std::size_t>(exponent), l);
  }
  return reduce(raw, alphabet);
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  out.reserve(w.length());
  for (Letter l : w.letters()) {
    const char base = static_cast<char>((l > 0 ? 'a' : 'A') + generator_of(l) - 1);
    out.push_back(base);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << to_string(w); }

std::vector<Word> all_reduced_words(Alphabet alphabet, std::size_t max_length) {
  std::vector<Word> out{Word(alphabet)};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t k = layer_begin; k < layer_end; ++k) {
      for (int slot = 0; slot < 2 * alphabet.rank(); ++slot) {
        const Letter l = letter_of_slot(slot);
        const Word& prefix = out[k];
        if (!prefix.empty() && prefix.back() == -l) continue;
        std::vector<Letter> letters(prefix.letters().begin(), prefix.letters().end());
        letters.push_back(l);
        out.push_back(reduce(letters, alphabet));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

}  // namespace amalgam

std::size_t std::hash<amalgam::Word>::operator()(const amalgam::Word& w) const noexcept {
  std::size_t h = static_cast<std::size_t>(w.rank()) * 0x9e3779b97f4a7c15ULL;
  for (amalgam::Letter l : w.letters()) h = (h ^ static_cast<std::size_t>(l + 64)) * 0x100000001b3ULL;
  return h;
}
