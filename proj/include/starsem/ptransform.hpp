#ifndef STARSEM_PTRANSFORM_HPP
#define STARSEM_PTRANSFORM_HPP

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace starsem {

/// A partial self-map of the vertex set {0, ..., n-1} of the star graph S_n,
/// where vertex 0 is the centre and 1, ..., n-1 are the outer vertices.
///
/// Composition is left to right: x(a * b) = (xa)b, i.e. `a` acts first.
/// This matches the right-action notation used throughout the library and is
/// the opposite of the function-composition convention, so beware.
///
/// The value is immutable and 16 bytes wide: the domain is a bit mask and the
/// images are packed four bits per vertex, which caps the vertex count at 16.
/// Exhaustive operations are separately capped far below that (n <= 8).
class PartialTransformation {
public:
  static constexpr int kMaxVertices = 16;

  /// The empty transformation on one vertex.
  PartialTransformation() : n_(1), dom_(0), img_(0) {}

  /// Builds a transformation from explicit (point, value) pairs.
  /// Throws std::invalid_argument on a duplicate point (a map cannot be
  /// multivalued) or an out-of-range vertex.
  static PartialTransformation make(int n,
                                    std::span<const std::pair<int, int>> pairs);
  static PartialTransformation make(
      int n, std::initializer_list<std::pair<int, int>> pairs);

  static PartialTransformation empty(int n);
  static PartialTransformation identity(int n);
  /// Identity restricted to the vertices in `dom_mask`.
  static PartialTransformation partial_identity(int n, std::uint32_t dom_mask);

  int n() const { return static_cast<int>(n_); }
  std::uint32_t dom_mask() const { return dom_; }
  int dom_size() const { return __builtin_popcount(dom_); }
  bool defined(int x) const { return (dom_ >> x) & 1u; }

  /// Image of x. Requires defined(x).
  int value(int x) const { return static_cast<int>((img_ >> (4 * x)) & 0xFu); }

  /// Set of values taken on dom intersected with `mask`.
  std::uint32_t image_mask_on(std::uint32_t mask) const;
  std::uint32_t image_mask() const { return image_mask_on(~0u); }
  int rank() const { return __builtin_popcount(image_mask()); }

  /// Kernel class of y: all points of the domain mapping to y.
  std::uint32_t preimage_mask(int y) const;

  bool is_injective() const;
  /// Inverse of an injective transformation (throws otherwise).
  PartialTransformation inverse() const;

  /// Forces 0 into the domain as a fixed point, keeping the action on the
  /// outer vertices; any value previously assigned to 0 is discarded.
  PartialTransformation zeta_lift() const;

  /// Copy with the additional pair x -> y. Requires !defined(x).
  PartialTransformation extended(int x, int y) const;
  /// Copy restricted to the vertices in `mask`.
  PartialTransformation restricted(std::uint32_t mask) const;

  /// Text codec: "n=<N>; x1->y1 x2->y2 ..." with pairs sorted by point;
  /// the empty map is "n=<N>;". Round-trips exactly through parse().
  std::string to_string() const;
  static PartialTransformation parse(std::string_view text);

  friend bool operator==(const PartialTransformation&,
                         const PartialTransformation&) = default;

private:
  PartialTransformation(std::uint32_t n, std::uint32_t dom, std::uint64_t img)
      : n_(n), dom_(dom), img_(img) {}

  std::uint32_t n_;
  std::uint32_t dom_;
  std::uint64_t img_;  // 4-bit slots; slots outside the domain are zero

  friend struct std::hash<PartialTransformation>;
};

/// x(a * b) = (xa)b; the domain shrinks to the points whose image under `a`
/// lies in the domain of `b`. Throws on mismatched vertex counts.
PartialTransformation compose(const PartialTransformation& a,
                              const PartialTransformation& b);

inline PartialTransformation operator*(const PartialTransformation& a,
                                       const PartialTransformation& b) {
  return compose(a, b);
}

/// Strict ordering matching the byte order of the text codec for maps on a
/// common vertex set (vertex labels are single digits up to the enumeration
/// cap, so comparing pair sequences numerically is the same thing).
bool codec_less(const PartialTransformation& a, const PartialTransformation& b);

std::ostream& operator<<(std::ostream& os, const PartialTransformation& a);

/// The partition of dom(a) induced by equality of images, one block per image
/// point. Blocks are bit masks ordered by their minimum element, so two
/// kernels compare equal iff the partitions coincide.
struct KernelPartition {
  std::vector<std::uint32_t> blocks;

  std::size_t size() const { return blocks.size(); }
  bool operator==(const KernelPartition&) const = default;

  /// Blocks as sorted vertex lists, for reports.
  std::vector<std::vector<int>> block_lists() const;
};

KernelPartition kernel(const PartialTransformation& a);

/// Mask of all n vertices.
inline std::uint32_t full_mask(int n) { return (1u << n) - 1u; }
/// Mask of the outer vertices 1, ..., n-1.
inline std::uint32_t outer_mask(int n) { return full_mask(n) & ~1u; }

}  // namespace starsem

template <>
struct std::hash<starsem::PartialTransformation> {
  std::size_t operator()(const starsem::PartialTransformation& a) const {
    std::uint64_t h = a.img_ * 0x9e3779b97f4a7c15ull;
    h ^= (static_cast<std::uint64_t>(a.dom_) << 32 | a.n_) * 0xff51afd7ed558ccdull;
    h ^= h >> 33;
    return static_cast<std::size_t>(h * 0xc4ceb9fe1a85ec53ull);
  }
};

#endif  // STARSEM_PTRANSFORM_HPP
