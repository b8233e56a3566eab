#include "hball/complex.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace hball {

Face::Face(std::initializer_list<int> vertices) : Face(std::vector<int>(vertices)) {}

Face::Face(std::vector<int> vertices) : v_(std::move(vertices)) {
  std::sort(v_.begin(), v_.end());
  if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
    throw std::invalid_argument("face has a repeated vertex");
  if (!v_.empty() && v_.front() < 0) throw std::invalid_argument("vertex labels must be nonnegative");
}

bool Face::contains(int vertex) const { return std::binary_search(v_.begin(), v_.end(), vertex); }

bool Face::is_subset_of(const Face& other) const {
  return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

Face Face::with(int vertex) const {
  if (contains(vertex)) return *this;
  std::vector<int> w = v_;
  w.insert(std::upper_bound(w.begin(), w.end(), vertex), vertex);
  Face out;
  out.v_ = std::move(w);
  return out;
}

Face Face::without(int vertex) const {
  Face out;
  out.v_.reserve(v_.size());
  for (int x : v_)
    if (x != vertex) out.v_.push_back(x);
  return out;
}

Face face_union(const Face& a, const Face& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Face(std::move(out));
}

Face face_intersection(const Face& a, const Face& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Face(std::move(out));
}

Face face_difference(const Face& a, const Face& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Face(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Face& f) {
  os << '{';
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  return os << '}';
}

std::string to_string(const Face& f) {
  std::ostringstream ss;
  ss << f;
  return ss.str();
}

FaceNotInComplex::FaceNotInComplex(const Face& f)
    : std::invalid_argument("face " + to_string(f) + " is not in the complex") {}

}  // namespace hball
