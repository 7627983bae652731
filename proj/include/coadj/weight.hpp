#ifndef COADJ_WEIGHT_HPP_
#define COADJ_WEIGHT_HPP_

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "coadj/rational.hpp"

namespace coadj {

// Vector in t* with exact rational coordinates (ambient coordinates of
// whatever datum it belongs to).
class WeightVec {
 public:
  WeightVec() = default;
  explicit WeightVec(std::size_t dim) : c_(dim, Rat(0)) {}
  WeightVec(std::initializer_list<Rat> init) : c_(init) {}
  explicit WeightVec(std::vector<Rat> coords) : c_(std::move(coords)) {}

  std::size_t dim() const { return c_.size(); }
  const Rat& operator[](std::size_t i) const { return c_[i]; }
  Rat& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Rat>& coords() const { return c_; }

  bool is_zero() const {
    for (const Rat& x : c_)
      if (x != 0) return false;
    return true;
  }

  WeightVec& operator+=(const WeightVec& o) {
    check_dim(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  WeightVec& operator-=(const WeightVec& o) {
    check_dim(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  WeightVec& operator*=(const Rat& s) {
    for (Rat& x : c_) x *= s;
    return *this;
  }

  friend WeightVec operator+(WeightVec a, const WeightVec& b) { return a += b; }
  friend WeightVec operator-(WeightVec a, const WeightVec& b) { return a -= b; }
  friend WeightVec operator*(const Rat& s, WeightVec v) { return v *= s; }
  friend WeightVec operator-(WeightVec v) {
    for (Rat& x : v.c_) x = -x;
    return v;
  }

  friend bool operator==(const WeightVec& a, const WeightVec& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const WeightVec& a, const WeightVec& b) {
    return !(a == b);
  }
  // Lexicographic; only used as an ordering key for sets and maps.
  friend bool operator<(const WeightVec& a, const WeightVec& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    }
    return false;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ',';
      s += rat_to_string(c_[i]);
    }
    return s;
  }

 private:
  void check_dim(const WeightVec& o) const {
    if (c_.size() != o.c_.size())
      throw std::invalid_argument("weight dimension mismatch");
  }
  std::vector<Rat> c_;
};

}  // namespace coadj

#endif  // COADJ_WEIGHT_HPP_
