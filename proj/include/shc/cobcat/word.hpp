#pragma once

#include <string>
#include <vector>

namespace shc::cob {

// Letter k > 0 is generator k-1, letter -k its inverse.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);
  static Word generator(int index);

  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  Word inverse() const;
  Word operator*(const Word& other) const;
  Word power(int e) const;
  bool operator==(const Word& other) const = default;

  // Names indexed by generator; inverses print with a trailing '^-1'.
  std::string to_string(const std::vector<std::string>& names) const;

  // Evaluate in any group given mult, inverse and the identity.
  template <class T, class Mul, class Inv>
  T eval(const std::vector<T>& images, const T& one, Mul mul, Inv inv) const {
    T out = one;
    for (int l : letters_) {
      const T& g = images.at(static_cast<std::size_t>(l > 0 ? l - 1 : -l - 1));
      out = l > 0 ? mul(out, g) : mul(out, inv(g));
    }
    return out;
  }

 private:
  std::vector<int> letters_;  // freely reduced
};

Word commutator(const Word& a, const Word& b);

}  // namespace shc::cob
