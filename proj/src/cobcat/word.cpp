#include "shc/cobcat/word.hpp"

#include <stdexcept>

namespace shc::cob {

namespace {

std::vector<int> reduce(const std::vector<int>& in) {
  std::vector<int> out;
  for (int l : in) {
    if (l == 0) throw std::invalid_argument("word letter 0");
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

}  // namespace

Word::Word(std::vector<int> letters) : letters_(reduce(letters)) {}

Word Word::generator(int index) { return Word({index + 1}); }

Word Word::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& l : out) l = -l;
  return Word(std::move(out));
}

Word Word::operator*(const Word& other) const {
  std::vector<int> all = letters_;
  all.insert(all.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(all));
}

Word Word::power(int e) const {
  Word base = e < 0 ? inverse() : *this, out;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) out = out * base;
  return out;
}

std::string Word::to_string(const std::vector<std::string>& names) const {
  if (letters_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ' ';
    int l = letters_[i];
    s += names.at(static_cast<std::size_t>(l > 0 ? l - 1 : -l - 1));
    if (l < 0) s += "^-1";
  }
  return s;
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

}  // namespace shc::cob
