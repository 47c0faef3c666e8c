#include "starsem/ptransform.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <stdexcept>

namespace starsem {

namespace {

void check_vertex_count(int n) {
  if (n < 1)
    throw std::invalid_argument("vertex count must be positive, got " +
                                std::to_string(n));
  if (n > PartialTransformation::kMaxVertices)
    throw std::invalid_argument(
        "vertex count " + std::to_string(n) + " exceeds the supported maximum of " +
        std::to_string(PartialTransformation::kMaxVertices));
}

}  // namespace

PartialTransformation PartialTransformation::make(
    int n, std::span<const std::pair<int, int>> pairs) {
  check_vertex_count(n);
  std::uint32_t dom = 0;
  std::uint64_t img = 0;
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= n)
      throw std::invalid_argument("point " + std::to_string(x) +
                                  " is outside {0,...," + std::to_string(n - 1) + "}");
    if (y < 0 || y >= n)
      throw std::invalid_argument("value " + std::to_string(y) +
                                  " is outside {0,...," + std::to_string(n - 1) + "}");
    if ((dom >> x) & 1u)
      throw std::invalid_argument("duplicate point " + std::to_string(x) +
                                  ": a map cannot be multivalued");
    dom |= 1u << x;
    img |= static_cast<std::uint64_t>(y) << (4 * x);
  }
  return PartialTransformation(static_cast<std::uint32_t>(n), dom, img);
}

PartialTransformation PartialTransformation::make(
    int n, std::initializer_list<std::pair<int, int>> pairs) {
  return make(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
}

PartialTransformation PartialTransformation::empty(int n) {
  check_vertex_count(n);
  return PartialTransformation(static_cast<std::uint32_t>(n), 0, 0);
}

PartialTransformation PartialTransformation::identity(int n) {
  return partial_identity(n, full_mask(n));
}

PartialTransformation PartialTransformation::partial_identity(
    int n, std::uint32_t dom_mask) {
  check_vertex_count(n);
  if (dom_mask & ~full_mask(n))
    throw std::invalid_argument("domain mask contains vertices outside {0,...," +
                                std::to_string(n - 1) + "}");
  std::uint64_t img = 0;
  for (std::uint32_t m = dom_mask; m; m &= m - 1) {
    int x = __builtin_ctz(m);
    img |= static_cast<std::uint64_t>(x) << (4 * x);
  }
  return PartialTransformation(static_cast<std::uint32_t>(n), dom_mask, img);
}

std::uint32_t PartialTransformation::image_mask_on(std::uint32_t mask) const {
  std::uint32_t im = 0;
  for (std::uint32_t m = dom_ & mask; m; m &= m - 1)
    im |= 1u << value(__builtin_ctz(m));
  return im;
}

std::uint32_t PartialTransformation::preimage_mask(int y) const {
  std::uint32_t pre = 0;
  for (std::uint32_t m = dom_; m; m &= m - 1) {
    int x = __builtin_ctz(m);
    if (value(x) == y) pre |= 1u << x;
  }
  return pre;
}

bool PartialTransformation::is_injective() const {
  std::uint32_t seen = 0;
  for (std::uint32_t m = dom_; m; m &= m - 1) {
    std::uint32_t bit = 1u << value(__builtin_ctz(m));
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

PartialTransformation PartialTransformation::inverse() const {
  std::uint32_t dom = 0;
  std::uint64_t img = 0;
  std::uint32_t seen = 0;
  for (std::uint32_t m = dom_; m; m &= m - 1) {
    int x = __builtin_ctz(m);
    int y = value(x);
    if ((seen >> y) & 1u)
      throw std::invalid_argument("inverse of a non-injective transformation");
    seen |= 1u << y;
    dom |= 1u << y;
    img |= static_cast<std::uint64_t>(x) << (4 * y);
  }
  return PartialTransformation(n_, dom, img);
}

PartialTransformation PartialTransformation::zeta_lift() const {
  std::uint32_t dom = (dom_ | 1u);
  std::uint64_t img = (img_ & ~0xFull);  // 0 -> 0, action on outer vertices kept
  return PartialTransformation(n_, dom, img);
}

PartialTransformation PartialTransformation::extended(int x, int y) const {
  return PartialTransformation(n_, dom_ | (1u << x),
                               img_ | (static_cast<std::uint64_t>(y) << (4 * x)));
}

PartialTransformation PartialTransformation::restricted(std::uint32_t mask) const {
  std::uint32_t dom = dom_ & mask;
  std::uint64_t img = 0;
  for (std::uint32_t m = dom; m; m &= m - 1) {
    int x = __builtin_ctz(m);
    img |= static_cast<std::uint64_t>(value(x)) << (4 * x);
  }
  return PartialTransformation(n_, dom, img);
}

PartialTransformation compose(const PartialTransformation& a,
                              const PartialTransformation& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("cannot compose transformations on " +
                                std::to_string(a.n()) + " and " +
                                std::to_string(b.n()) + " vertices");
  PartialTransformation out = PartialTransformation::empty(a.n());
  for (std::uint32_t m = a.dom_mask(); m; m &= m - 1) {
    int x = __builtin_ctz(m);
    int y = a.value(x);
    if (b.defined(y)) out = out.extended(x, b.value(y));
  }
  return out;
}

bool codec_less(const PartialTransformation& a, const PartialTransformation& b) {
  if (a.n() != b.n()) return a.n() < b.n();
  std::uint32_t ma = a.dom_mask(), mb = b.dom_mask();
  while (ma && mb) {
    int xa = __builtin_ctz(ma), xb = __builtin_ctz(mb);
    if (xa != xb) return xa < xb;
    if (a.value(xa) != b.value(xb)) return a.value(xa) < b.value(xb);
    ma &= ma - 1;
    mb &= mb - 1;
  }
  return !ma && mb;  // a prefix of b sorts first
}

std::string PartialTransformation::to_string() const {
  std::string s = "n=" + std::to_string(n_) + ";";
  for (std::uint32_t m = dom_; m; m &= m - 1) {
    int x = __builtin_ctz(m);
    s += " " + std::to_string(x) + "->" + std::to_string(value(x));
  }
  return s;
}

PartialTransformation PartialTransformation::parse(std::string_view text) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("malformed transformation '" + std::string(text) +
                                "': " + why);
  };
  std::size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto read_int = [&](const char* what) {
    int v = 0;
    auto [ptr, ec] =
        std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec != std::errc() || ptr == text.data() + pos) fail(std::string("expected ") + what);
    pos = static_cast<std::size_t>(ptr - text.data());
    return v;
  };

  skip_spaces();
  if (text.substr(pos, 2) != "n=") fail("expected 'n=<count>;'");
  pos += 2;
  int n = read_int("a vertex count");
  if (pos >= text.size() || text[pos] != ';') fail("expected ';' after the vertex count");
  ++pos;
  check_vertex_count(n);

  std::vector<std::pair<int, int>> pairs;
  for (;;) {
    skip_spaces();
    if (pos == text.size()) break;
    int x = read_int("a point");
    if (text.substr(pos, 2) != "->") fail("expected '->' after point " + std::to_string(x));
    pos += 2;
    int y = read_int("a value");
    pairs.emplace_back(x, y);
  }
  try {
    return make(n, pairs);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
  return empty(n);  // unreachable
}

std::ostream& operator<<(std::ostream& os, const PartialTransformation& a) {
  return os << a.to_string();
}

KernelPartition kernel(const PartialTransformation& a) {
  KernelPartition k;
  std::uint32_t seen_values = 0;
  for (std::uint32_t m = a.dom_mask(); m; m &= m - 1) {
    int y = a.value(__builtin_ctz(m));
    if ((seen_values >> y) & 1u) continue;
    seen_values |= 1u << y;
    k.blocks.push_back(a.preimage_mask(y));
  }
  // canonical order: by minimum element
  std::sort(k.blocks.begin(), k.blocks.end(),
            [](std::uint32_t x, std::uint32_t y) { return (x & -x) < (y & -y); });
  return k;
}

std::vector<std::vector<int>> KernelPartition::block_lists() const {
  std::vector<std::vector<int>> out;
  out.reserve(blocks.size());
  for (std::uint32_t b : blocks) {
    std::vector<int> pts;
    for (std::uint32_t m = b; m; m &= m - 1) pts.push_back(__builtin_ctz(m));
    out.push_back(std::move(pts));
  }
  return out;
}

}  // namespace starsem
