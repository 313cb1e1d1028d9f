#include "hvector/cd.hpp"

#include <memory>

#include "hvector/checked.hpp"
#include "hvector/error.hpp"
#include "memo.hpp"

namespace hvector {

CDWord::CDWord(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_) {
    if (c != 'C' && c != 'D') throw DomainError("CD-word letters must be C or D: " + letters_);
  }
}

int CDWord::degree() const {
  int d = 0;
  for (char c : letters_) d += c == 'C' ? 1 : 2;
  return d;
}

CDWord CDWord::prepend(char letter) const {
  if (letter != 'C' && letter != 'D') throw DomainError("CD-word letters must be C or D");
  return CDWord(letter + letters_, 0);
}

std::string CDWord::applied_to_point() const {
  return letters_.empty() ? "pt" : letters_ + "(pt)";
}

std::uint64_t cd_word_count(int d) {
  if (d < 0) return 0;
  std::uint64_t a = 1, b = 1;  // counts for degrees k-1 and k
  for (int k = 1; k <= d; ++k) {
    const std::uint64_t next = b + a;
    a = b;
    b = next;
  }
  return a;
}

std::vector<CDWord> cd_words(int d) {
  if (d < 0) return {};
  if (d == 0) return {CDWord()};
  std::vector<CDWord> out;
  for (const auto& w : cd_words(d - 1)) out.push_back(w.prepend('C'));
  if (d >= 2) {
    for (const auto& w : cd_words(d - 2)) out.push_back(w.prepend('D'));
  }
  return out;
}

CDVector::CDVector(int degree, std::map<CDWord, std::int64_t> coeffs) : degree_(degree) {
  for (const auto& [w, c] : coeffs) add(w, c);
}

CDVector CDVector::unit(const CDWord& w) {
  CDVector v(w.degree());
  v.add(w, 1);
  return v;
}

std::int64_t CDVector::coeff(const CDWord& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? 0 : it->second;
}

void CDVector::add(const CDWord& w, std::int64_t c) {
  if (w.degree() != degree_) {
    throw DimensionMismatch("word " + w.letters() + " has degree " + std::to_string(w.degree()) +
                            ", vector has degree " + std::to_string(degree_));
  }
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(w, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) coeffs_.erase(it);
  }
}

CDVector CDVector::operator+(const CDVector& other) const {
  if (degree_ != other.degree_) throw DimensionMismatch("adding CD-vectors of different degree");
  CDVector out = *this;
  for (const auto& [w, c] : other.coeffs_) out.add(w, c);
  return out;
}

CDVector CDVector::operator-(const CDVector& other) const { return *this + other.scaled(-1); }

CDVector CDVector::scaled(std::int64_t c) const {
  CDVector out(degree_);
  for (const auto& [w, v] : coeffs_) out.add(w, checked_mul(c, v));
  return out;
}

CDVector CDVector::prepend(char letter) const {
  CDVector out(degree_ + (letter == 'C' ? 1 : 2));
  for (const auto& [w, c] : coeffs_) out.add(w.prepend(letter), c);
  return out;
}

std::string CDVector::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : coeffs_) {
    const std::string name = w.empty() ? "pt" : w.letters();
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += name;
    first = false;
  }
  return out;
}

namespace {

using detail::MemoTable;

MemoTable<FlagVector>& word_flag_memo() {
  static MemoTable<FlagVector> memo;
  return memo;
}

MemoTable<std::shared_ptr<const LeftSolver>>& solver_memo() {
  static MemoTable<std::shared_ptr<const LeftSolver>> memo;
  return memo;
}

}  // namespace

FlagVector word_flag(const CDWord& w) {
  return word_flag_memo().get(w.letters(), [&] {
    if (w.empty()) return FlagVector::point();
    const FlagVector inner = word_flag(w.rest());
    return w.first() == 'C' ? pyramid_flag(inner) : d_flag(inner);
  });
}

FlagVector vector_flag(const CDVector& v) {
  std::vector<FlagTerm> terms;
  for (const auto& [w, c] : v.coeffs()) terms.push_back({c, word_flag(w)});
  if (terms.empty()) return FlagVector(v.degree());
  return linear_combine(terms);
}

namespace {

CDVector expand_I_word(const CDWord& w) {
  if (w.empty()) return CDVector::unit(CDWord("C"));
  if (w.first() == 'D') return expand_I_word(w.rest()).prepend('D');
  // I C u = C C u + D u
  const CDWord u = w.rest();
  CDVector out = CDVector::unit(w.prepend('C'));
  out.add(u.prepend('D'), 1);
  return out;
}

}  // namespace

CDVector expand_I(const CDVector& v) {
  CDVector out(v.degree() + 1);
  for (const auto& [w, c] : v.coeffs()) out = out + expand_I_word(w).scaled(c);
  return out;
}

CDVector apply_letters(std::string_view letters) {
  CDVector v = CDVector::unit(CDWord());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    switch (*it) {
      case 'C':
      case 'D': v = v.prepend(*it); break;
      case 'I': v = expand_I(v); break;
      default: throw DomainError(std::string("unknown operator letter '") + *it + "'");
    }
  }
  return v;
}

IntMatrix basis_matrix(int d) {
  if (d < 0) throw DomainError("basis_matrix needs d >= 0");
  const auto words = cd_words(d);
  const auto sets = all_dimsets(d);
  IntMatrix m(words.size(), sets.size());
  for (std::size_t r = 0; r < words.size(); ++r) {
    const FlagVector f = word_flag(words[r]);
    for (std::size_t c = 0; c < sets.size(); ++c) m(r, c) = f.get(sets[c]);
  }
  return m;
}

CDVector to_cd_basis(const FlagVector& f) {
  const int d = f.dim();
  if (d < 0) throw SpanError("the empty polytope has no CD coordinates");
  auto solver = solver_memo().get(std::to_string(d), [d] {
    return std::make_shared<const LeftSolver>(basis_matrix(d));
  });
  const auto sets = all_dimsets(d);
  std::vector<std::int64_t> rhs;
  rhs.reserve(sets.size());
  for (DimSet s : sets) rhs.push_back(f.get(s));
  const auto x = solver->solve(rhs);
  if (!x) throw SpanError("flag vector is not an integer combination of CD-word flag vectors");
  const auto words = cd_words(d);
  CDVector out(d);
  for (std::size_t i = 0; i < words.size(); ++i) out.add(words[i], (*x)[i]);
  return out;
}

}  // namespace hvector
