#include "amalgam/doubles.hpp"

#include <algorithm>
#include <cctype>

#include "amalgam/errors.hpp"

namespace amalgam {
namespace {

// Syllables are handled internally by their preimage in A: an Abar-side
// syllable with word v is stored as bar^-1(v). The amalgamation c = bar(c)
// then reads "the same word on either side", and both factors use C's graph
// and transversal.
struct Piece {
  Side side;
  Word word;
};

class NormalFormBuilder {
 public:
  NormalFormBuilder(const SubgroupGraph& subgroup, std::size_t bound) : subgroup_(subgroup), bound_(bound) {}

  void append(Side side, const Word& w) {
    if (w.empty()) return;
    if (stack_.empty()) {
      stack_.push_back({side, w});
      settle_single();
      return;
    }
    if (subgroup_.member(w)) {
      push_subgroup(w, stack_.size());
      return;
    }
    if (stack_.size() == 1 && subgroup_.member(stack_[0].word)) {
      stack_[0] = {side, mul(stack_[0].word, w)};
      settle_single();
      return;
    }
    if (stack_.back().side == side) {
      Word merged = mul(stack_.back().word, w);
      if (stack_.size() == 1) {
        stack_[0].word = std::move(merged);
        settle_single();
        return;
      }
      if (subgroup_.member(merged)) {
        stack_.pop_back();
        push_subgroup(merged, stack_.size());
        return;
      }
      CosetDecomposition d = subgroup_.coset_decompose(merged);
      stack_.back().word = std::move(d.representative);
      push_subgroup(d.subgroup_part, stack_.size() - 1);
      return;
    }
    CosetDecomposition d = subgroup_.coset_decompose(w);
    push_subgroup(d.subgroup_part, stack_.size());
    stack_.push_back({side, std::move(d.representative)});
    if (stack_.size() > bound_)
      throw BudgetError("normal form exceeds the syllable bound of " + std::to_string(bound_));
  }

  std::vector<Piece> take() { return std::move(stack_); }

 private:
  // Right-multiplies the prefix stack_[0..end) by c in C, pushing the C-part
  // of every coset syllable leftward into the first syllable.
  void push_subgroup(Word c, std::size_t end) {
    if (c.empty()) return;
    if (end == 0) {
      stack_.insert(stack_.begin(), Piece{Side::A, std::move(c)});
      settle_single();
      return;
    }
    for (std::size_t k = end; k-- > 1;) {
      CosetDecomposition d = subgroup_.coset_decompose(mul(stack_[k].word, c));
      stack_[k].word = std::move(d.representative);
      c = std::move(d.subgroup_part);
      if (c.empty()) return;
    }
    stack_[0].word = mul(stack_[0].word, c);
    settle_single();
  }

  void settle_single() {
    if (stack_.size() != 1) return;
    if (stack_[0].word.empty())
      stack_.clear();
    else if (subgroup_.member(stack_[0].word))
      stack_[0].side = Side::A;
  }

  const SubgroupGraph& subgroup_;
  std::size_t bound_;
  std::vector<Piece> stack_;
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::string_view side_name(Side side) { return side == Side::A ? "A" : "Abar"; }

FreeAutomorphism FreeAutomorphism::identity(Alphabet alphabet) {
  FreeAutomorphism f;
  f.alphabet_ = alphabet;
  for (int i = 1; i <= alphabet.rank(); ++i) f.images_.push_back(Word::generator(alphabet, i));
  f.inverse_images_ = f.images_;
  return f;
}

FreeAutomorphism FreeAutomorphism::from_images(Alphabet alphabet, std::vector<Word> images) {
  if (static_cast<int>(images.size()) != alphabet.rank())
    throw DomainError("bar needs one image per generator (" + std::to_string(alphabet.rank()) + "), got " +
                      std::to_string(images.size()));
  for (const Word& w : images)
    if (w.rank() != alphabet.rank()) throw DomainError("bar image has the wrong rank");
  FreeAutomorphism f = identity(alphabet);
  if (images == f.images_) return f;

  // Necessary condition: the images generate A (their Stallings graph is the
  // one-vertex rose).
  if (SubgroupGraph::build(images, alphabet).index() != std::optional<std::size_t>(1))
    throw DomainError("bar images do not generate the free group");

  // Nielsen reduction, tracking each current tuple entry u_i as bar(t_i).
  const std::size_t r = images.size();
  std::vector<Word> u = images;
  std::vector<Word> t = f.images_;
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t i = 0; i < r && !improved; ++i) {
      for (std::size_t j = 0; j < r && !improved; ++j) {
        if (i == j) continue;
        for (int variant = 0; variant < 4 && !improved; ++variant) {
          const Word& uj = u[j];
          const Word factor = (variant % 2 == 0) ? uj : inv(uj);
          const Word tfactor = (variant % 2 == 0) ? t[j] : inv(t[j]);
          Word candidate = variant < 2 ? mul(u[i], factor) : mul(factor, u[i]);
          if (candidate.length() < u[i].length()) {
            t[i] = variant < 2 ? mul(t[i], tfactor) : mul(tfactor, t[i]);
            u[i] = std::move(candidate);
            improved = true;
          }
        }
      }
    }
  }
  std::vector<Word> inverse(r);
  std::vector<bool> hit(r, false);
  for (std::size_t i = 0; i < r; ++i) {
    if (u[i].length() != 1)
      throw DomainError("could not invert bar: Nielsen reduction stalled at " + to_string(u[i]));
    const Letter l = u[i][0];
    const std::size_t g = static_cast<std::size_t>(generator_of(l) - 1);
    if (hit[g]) throw DomainError("bar images are not a basis");
    hit[g] = true;
    inverse[g] = l > 0 ? t[i] : inv(t[i]);
  }
  f.identity_ = false;
  f.images_ = std::move(images);
  f.inverse_images_ = std::move(inverse);
  return f;
}

Word FreeAutomorphism::apply(const Word& w) const {
  if (identity_) return w;
  return substitute(w, images_, alphabet_);
}

Word FreeAutomorphism::apply_inverse(const Word& w) const {
  if (identity_) return w;
  return substitute(w, inverse_images_, alphabet_);
}

DoubleGroup DoubleGroup::make(Alphabet alphabet, std::span<const Word> subgroup_generators,
                              std::optional<std::vector<Word>> bar) {
  return over(SubgroupGraph::build(subgroup_generators, alphabet), std::move(bar));
}

DoubleGroup DoubleGroup::over(SubgroupGraph subgroup, std::optional<std::vector<Word>> bar) {
  const Alphabet alphabet = subgroup.alphabet();
  FreeAutomorphism f = bar ? FreeAutomorphism::from_images(alphabet, std::move(*bar)) : FreeAutomorphism::identity(alphabet);
  return DoubleGroup(std::move(subgroup), std::move(f));
}

bool DoubleGroup::in_amalgam(Side side, const Word& w) const {
  return subgroup_.member(side == Side::A ? w : bar_.apply_inverse(w));
}

DoubleElement DoubleGroup::normalize(std::span<const Syllable> raw) const {
  NormalFormBuilder builder(subgroup_, syllable_bound_);
  for (const Syllable& s : raw) {
    if (s.word.rank() != alphabet().rank()) throw DomainError("syllable word has the wrong rank");
    builder.append(s.side, s.side == Side::A ? s.word : bar_.apply_inverse(s.word));
  }
  DoubleElement out;
  for (Piece& p : builder.take())
    out.syllables_.push_back({p.side, p.side == Side::A ? std::move(p.word) : bar_.apply(p.word)});
  return out;
}

DoubleElement DoubleGroup::element(Side side, const Word& w) const {
  const Syllable s{side, w};
  return normalize(std::span<const Syllable>(&s, 1));
}

std::vector<DoubleElement> DoubleGroup::generators() const {
  std::vector<DoubleElement> out;
  for (Side side : {Side::A, Side::Abar})
    for (int i = 1; i <= alphabet().rank(); ++i) out.push_back(element(side, Word::generator(alphabet(), i)));
  return out;
}

DoubleElement DoubleGroup::multiply(const DoubleElement& x, const DoubleElement& y) const {
  std::vector<Syllable> raw = x.syllables();
  raw.insert(raw.end(), y.syllables().begin(), y.syllables().end());
  return normalize(raw);
}

DoubleElement DoubleGroup::inverse(const DoubleElement& x) const {
  std::vector<Syllable> raw;
  for (auto it = x.syllables().rbegin(); it != x.syllables().rend(); ++it) raw.push_back({it->side, inv(it->word)});
  return normalize(raw);
}

DoubleElement DoubleGroup::commutator(const DoubleElement& x, const DoubleElement& y) const {
  return multiply(multiply(inverse(x), inverse(y)), multiply(x, y));
}

bool DoubleGroup::equal(const DoubleElement& x, const DoubleElement& y) const {
  const DoubleElement& nx = x.is_canonical() ? x : normalize(x.syllables());
  const DoubleElement& ny = y.is_canonical() ? y : normalize(y.syllables());
  return nx.syllables() == ny.syllables();
}

Word DoubleGroup::retract(const DoubleElement& x) const {
  Word out(alphabet());
  for (const Syllable& s : x.syllables()) out = mul(out, s.side == Side::A ? s.word : bar_.apply_inverse(s.word));
  return out;
}

KernelElement DoubleGroup::kernel_gen(const Word& a) const {
  const std::vector<Syllable> raw{{Side::A, a}, {Side::Abar, inv(bar_.apply(a))}};
  return KernelElement(normalize(raw));
}

bool DoubleGroup::is_kernel_member(const DoubleElement& x) const { return retract(x).empty(); }

CommutationReport DoubleGroup::check_ck_commutation(std::span<const Word> samples) const {
  CommutationReport report;
  report.subgroup_normal = subgroup_.is_normal();
  for (const Word& c : subgroup_.generators()) {
    const DoubleElement ce = element(Side::A, c);
    for (const Word& a : samples) {
      ++report.checks;
      DoubleElement comm = commutator(ce, kernel_gen(a).element());
      if (!comm.is_identity()) report.failures.push_back({c, a, std::move(comm)});
    }
  }
  return report;
}

std::vector<Syllable> parse_syllables(std::string_view text, Alphabet alphabet) {
  std::vector<Syllable> out;
  const std::string whole = trim(text);
  if (whole.empty() || whole == "1") return out;
  std::size_t start = 0;
  while (start <= whole.size()) {
    std::size_t bar = whole.find('|', start);
    if (bar == std::string::npos) bar = whole.size();
    const std::string part = trim(std::string_view(whole).substr(start, bar - start));
    const std::size_t colon = part.find(':');
    if (colon == std::string::npos) throw ParseError("syllable \"" + part + "\" lacks a side prefix (A: or Abar:)");
    const std::string side = trim(std::string_view(part).substr(0, colon));
    Syllable s;
    if (side == "A")
      s.side = Side::A;
    else if (side == "Abar")
      s.side = Side::Abar;
    else
      throw ParseError("unknown side \"" + side + "\" (expected A or Abar)");
    s.word = parse_word(std::string_view(part).substr(colon + 1), alphabet);
    out.push_back(std::move(s));
    start = bar + 1;
  }
  return out;
}

DoubleElement parse_element(std::string_view text, const DoubleGroup& group) {
  return group.normalize(parse_syllables(text, group.alphabet()));
}

std::string to_string(std::span<const Syllable> syllables) {
  if (syllables.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < syllables.size(); ++i) {
    if (i) out += " | ";
    out += std::string(side_name(syllables[i].side)) + ": " + to_string(syllables[i].word);
  }
  return out;
}

std::string to_string(const DoubleElement& x) { return to_string(x.syllables()); }

}  // namespace amalgam
