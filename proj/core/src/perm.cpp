#include "posmaps/perm.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

#include "posmaps/errors.hpp"

namespace posmaps {

namespace {

int parse_int(std::string_view field, std::string_view what) {
  int value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || field.empty()) {
    throw ParameterError("sigma: cannot parse " + std::string(what) + " '" +
                         std::string(field) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

Permutation Permutation::from_images(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  if (n == 0) throw ParameterError("sigma: permutation degree must be positive");
  std::vector<int> map(images.size());
  std::vector<bool> seen(images.size(), false);
  for (int i = 0; i < n; ++i) {
    const int v = images[static_cast<std::size_t>(i)];
    if (v < 1 || v > n) {
      throw ParameterError("sigma: image " + std::to_string(v) + " of point " +
                           std::to_string(i + 1) + " is outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v - 1)]) {
      throw ParameterError("sigma: value " + std::to_string(v) +
                           " appears more than once; not a bijection");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
    map[static_cast<std::size_t>(i)] = v - 1;
  }
  return Permutation(std::move(map));
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw ParameterError("sigma: degree must be positive, got " + std::to_string(n));
  std::vector<int> map(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) map[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(map));
}

Permutation Permutation::tau(int n, int k) {
  if (n < 1) throw ParameterError("sigma: degree must be positive, got " + std::to_string(n));
  if (k < 1 || k > n) {
    throw ParameterError("sigma: shift k=" + std::to_string(k) + " outside 1.." +
                         std::to_string(n));
  }
  std::vector<int> map(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) map[static_cast<std::size_t>(i)] = (i + k) % n;
  return Permutation(std::move(map));
}

Permutation Permutation::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParameterError("sigma: expected 'tau:n:k', 'images:...' or 'id:n', got '" +
                         std::string(text) + "'");
  }
  const auto kind = text.substr(0, colon);
  const auto rest = text.substr(colon + 1);
  if (kind == "id") {
    return identity(parse_int(rest, "degree"));
  }
  if (kind == "tau") {
    auto parts = split(rest, ':');
    if (parts.size() != 2) {
      throw ParameterError("sigma: 'tau' form is tau:n:k, got '" + std::string(text) + "'");
    }
    return tau(parse_int(parts[0], "degree"), parse_int(parts[1], "shift"));
  }
  if (kind == "images") {
    std::vector<int> images;
    for (auto field : split(rest, ',')) images.push_back(parse_int(field, "image"));
    return from_images(images);
  }
  throw ParameterError("sigma: unknown permutation form '" + std::string(kind) + "'");
}

int Permutation::apply(int i) const {
  if (i < 1 || i > degree()) {
    throw ParameterError("point " + std::to_string(i) + " outside 1.." + std::to_string(degree()));
  }
  return map_[static_cast<std::size_t>(i - 1)] + 1;
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(map_.size());
  std::transform(map_.begin(), map_.end(), out.begin(), [](int v) { return v + 1; });
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[static_cast<std::size_t>(map_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (map_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw ParameterError("compose: degrees " + std::to_string(a.degree()) + " and " +
                         std::to_string(b.degree()) + " differ");
  }
  std::vector<int> images(static_cast<std::size_t>(a.degree()));
  for (int i = 1; i <= a.degree(); ++i) images[static_cast<std::size_t>(i - 1)] = a.apply(b.apply(i));
  return Permutation::from_images(images);
}

std::string CycleDecomposition::to_string() const {
  std::ostringstream os;
  for (const auto& cycle : cycles) {
    os << '(';
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      if (j) os << ' ';
      os << cycle[j];
    }
    os << ')';
  }
  return os.str();
}

CycleDecomposition cycle_decompose(const Permutation& sigma) {
  CycleDecomposition out;
  out.n = sigma.degree();
  std::vector<bool> visited(static_cast<std::size_t>(out.n), false);
  // Scanning starts in increasing order, so each cycle begins at its minimum
  // and cycles come out sorted by that minimum.
  for (int start = 0; start < out.n; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    int i = start;
    while (!visited[static_cast<std::size_t>(i)]) {
      visited[static_cast<std::size_t>(i)] = true;
      cycle.push_back(i + 1);
      i = sigma.apply0(i);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  if (n < 1) throw ParameterError("from_cycles: degree must be positive");
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  for (const auto& cycle : cycles) {
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      const int from = cycle[j];
      const int to = cycle[(j + 1) % cycle.size()];
      if (from < 1 || from > n) throw ParameterError("from_cycles: point out of range");
      if (images[static_cast<std::size_t>(from - 1)] != 0) {
        throw ParameterError("from_cycles: cycles are not disjoint at " + std::to_string(from));
      }
      images[static_cast<std::size_t>(from - 1)] = to;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (images[static_cast<std::size_t>(i)] == 0) {
      throw ParameterError("from_cycles: point " + std::to_string(i + 1) + " not covered");
    }
  }
  return Permutation::from_images(images);
}

CycleLengths min_max_cycle_length(const Permutation& sigma) {
  const auto dec = cycle_decompose(sigma);
  CycleLengths out{std::numeric_limits<int>::max(), 0};
  for (const auto& cycle : dec.cycles) {
    const int len = static_cast<int>(cycle.size());
    out.l_min = std::min(out.l_min, len);
    out.l_max = std::max(out.l_max, len);
  }
  return out;
}

bool is_involution(const Permutation& sigma) {
  for (int i = 0; i < sigma.degree(); ++i) {
    if (sigma.apply0(sigma.apply0(i)) != i) return false;
  }
  return true;
}

std::vector<int> fixed_points(const Permutation& sigma) {
  std::vector<int> out;
  for (int i = 0; i < sigma.degree(); ++i) {
    if (sigma.apply0(i) == i) out.push_back(i + 1);
  }
  return out;
}

bool is_full_cycle(const Permutation& sigma) {
  return cycle_decompose(sigma).cycles.size() == 1;
}

}  // namespace posmaps
