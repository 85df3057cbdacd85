#include "qconst/word.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qconst {

Word::Word(const std::vector<Letter>& letters)
{
  for (Letter l : letters)
    push_back(l);
}

Word Word::parse(std::string_view digits)
{
  Word w;
  for (char c : digits) {
    if (c < '1' || c > '9')
      throw std::invalid_argument("invalid letter '" + std::string(1, c) + "' in word");
    w.push_back(c - '0');
  }
  return w;
}

void Word::push_back(Letter l)
{
  if (l < 1 || l > kMaxLetters)
    throw std::invalid_argument("letter out of range 1..9: " + std::to_string(l));
  letters_.push_back(static_cast<char>(l));
}

Word Word::prefix(std::size_t len) const
{
  Word w;
  w.letters_ = letters_.substr(0, len);
  return w;
}

Word Word::suffix_from(std::size_t pos) const
{
  Word w;
  w.letters_ = letters_.substr(pos);
  return w;
}

Word Word::without(std::size_t pos) const
{
  Word w = *this;
  w.letters_.erase(pos, 1);
  return w;
}

Word Word::rotated_right() const
{
  if (letters_.size() < 2)
    return *this;
  Word w;
  w.letters_ = letters_.back() + letters_.substr(0, letters_.size() - 1);
  return w;
}

Word Word::rotated_left() const
{
  if (letters_.size() < 2)
    return *this;
  Word w;
  w.letters_ = letters_.substr(1) + letters_.front();
  return w;
}

std::vector<int> Word::counts(int k) const
{
  std::vector<int> c(k, 0);
  for (std::size_t i = 0; i < size(); ++i) {
    const Letter l = (*this)[i];
    if (l > k)
      throw std::invalid_argument("letter " + std::to_string(l) + " exceeds k = " + std::to_string(k));
    ++c[l - 1];
  }
  return c;
}

Letter Word::max_letter() const
{
  Letter m = 0;
  for (std::size_t i = 0; i < size(); ++i)
    m = std::max(m, (*this)[i]);
  return m;
}

std::vector<Letter> Word::letters() const
{
  std::vector<Letter> v;
  for (std::size_t i = 0; i < size(); ++i)
    v.push_back((*this)[i]);
  return v;
}

Word operator+(const Word& a, const Word& b)
{
  Word w;
  w.letters_ = a.letters_ + b.letters_;
  return w;
}

std::string Word::to_string() const
{
  std::string s;
  for (char c : letters_)
    s.push_back(static_cast<char>('0' + c));
  return s;
}

Signature::Signature(std::vector<int> multiplicities) : mult_(std::move(multiplicities))
{
  if (mult_.empty() || static_cast<int>(mult_.size()) > kMaxLetters)
    throw std::invalid_argument("signature needs 1..9 letters");
  for (int m : mult_)
    if (m < 0)
      throw std::invalid_argument("negative multiplicity in signature");
  if (n() == 0)
    throw std::invalid_argument("empty signature");
}

Signature Signature::parse(std::string_view digits)
{
  const Word w = Word::parse(digits);
  if (w.empty())
    throw std::invalid_argument("empty signature");
  return Signature(w.counts(w.max_letter()));
}

Signature Signature::empty(int k)
{
  Signature s;
  s.mult_.assign(k, 0);
  return s;
}

int Signature::n() const
{
  return std::accumulate(mult_.begin(), mult_.end(), 0);
}

Signature Signature::child(Letter j) const
{
  if (j < 1 || j > k() || mult_[j - 1] == 0)
    throw std::invalid_argument("cannot remove letter " + std::to_string(j) + " from " + to_string());
  Signature s;
  s.mult_ = mult_;
  --s.mult_[j - 1];
  return s;
}

std::vector<Letter> Signature::letters() const
{
  std::vector<Letter> v;
  for (int j = 1; j <= k(); ++j)
    if (mult_[j - 1] > 0)
      v.push_back(j);
  return v;
}

bool Signature::is_single_letter() const
{
  return letters().size() == 1;
}

Word Signature::sorted_word() const
{
  Word w;
  for (int j = 1; j <= k(); ++j)
    for (int c = 0; c < mult_[j - 1]; ++c)
      w.push_back(j);
  return w;
}

long factorial(int n)
{
  long f = 1;
  for (int i = 2; i <= n; ++i)
    f *= i;
  return f;
}

std::size_t Signature::component_size() const
{
  long f = factorial(n());
  for (int m : mult_)
    f /= factorial(m);
  return static_cast<std::size_t>(f);
}

Basis::Basis(const Signature& q) : sig_(q)
{
  std::vector<Letter> letters = q.sorted_word().letters();
  do {
    words_.emplace_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  for (std::size_t i = 0; i < words_.size(); ++i)
    index_.emplace(words_[i].raw(), i);
}

long Basis::index_of(const Word& w) const
{
  auto it = index_.find(w.raw());
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

Basis enumerate_component(const Signature& q)
{
  return Basis(q);
}

} // namespace qconst
