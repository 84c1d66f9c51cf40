#pragma once

#include <map>

namespace liebra {

// Finite integer linear combination over canonically ordered keys. Zero
// coefficients are never stored, so equality of maps is equality of elements.
template <typename K>
class LinCombo {
 public:
  LinCombo() = default;
  LinCombo(const K& k, long long c) { add(k, c); }

  void add(const K& k, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted && (it->second += c) == 0) terms_.erase(it);
  }

  LinCombo& operator+=(const LinCombo& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinCombo& operator-=(const LinCombo& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinCombo& operator*=(long long s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend LinCombo operator+(LinCombo a, const LinCombo& b) { return a += b; }
  friend LinCombo operator-(LinCombo a, const LinCombo& b) { return a -= b; }
  friend LinCombo operator*(long long s, LinCombo a) { return a *= s; }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  long long coeff(const K& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? 0 : it->second;
  }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  friend bool operator==(const LinCombo&, const LinCombo&) = default;

 private:
  std::map<K, long long> terms_;
};

}  // namespace liebra
