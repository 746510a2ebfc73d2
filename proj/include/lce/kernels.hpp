#pragma once

// Data-parallel inner loops of the subset dynamic program. Every kernel has a
// portable scalar reference; vector variants must produce identical output and
// are chosen at runtime from what the CPU reports.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lce/signed_graph.hpp"

namespace lce::kernels {

enum class Isa { scalar, avx2 };

const char* to_string(Isa isa) noexcept;
std::optional<Isa> parse_isa(std::string_view name) noexcept;
bool isa_available(Isa isa) noexcept;
/// Widest instruction set usable on this machine.
Isa best_isa() noexcept;

/// Answers U(S) = union of masks[x] over x in S with two lookups into half tables
/// of 2^(n/2) entries each.
class SubsetUnion {
 public:
  SubsetUnion() = default;
  explicit SubsetUnion(std::span<const SubsetMask> masks);

  SubsetMask operator()(SubsetMask s) const noexcept {
    return low_[s & low_mask_] | high_[s >> low_bits_];
  }

  unsigned low_bits() const noexcept { return low_bits_; }
  SubsetMask low_mask() const noexcept { return low_mask_; }
  const SubsetMask* low_data() const noexcept { return low_.data(); }
  const SubsetMask* high_data() const noexcept { return high_.data(); }

 private:
  unsigned low_bits_ = 0;
  SubsetMask low_mask_ = 0;
  std::vector<SubsetMask> low_{0};
  std::vector<SubsetMask> high_{0};
};

/// Largest vertex count the half tables are built for.
inline constexpr std::size_t kMaxTableVertices = 40;

struct GoodnessTables {
  SubsetUnion positive;
  SubsetUnion negative;
  SubsetMask full = 0;
};

GoodnessTables make_goodness_tables(const SignedGraph& g);

// v (outside X) is good for X exactly when no negative neighbour of v is an
// endpoint of a positive edge crossing the cut (X, V \ X):
//   boundary(X) = (X & P(V\X)) | ((V\X) & P(X))
//   good(X)     = (V\X) & ~N(boundary(X))
// with P and N the positive and negative neighbourhood unions.

/// out[i] = mask of vertices good for subset first + i, for i < count.
void good_sets_scalar(const GoodnessTables& t, SubsetMask first, std::size_t count,
                      SubsetMask* out) noexcept;
void good_sets_avx2(const GoodnessTables& t, SubsetMask first, std::size_t count,
                    SubsetMask* out) noexcept;
void good_sets(Isa isa, const GoodnessTables& t, SubsetMask first, std::size_t count,
               SubsetMask* out) noexcept;

/// Bit i set iff bytes[i] != 0, for count <= 64.
std::uint64_t nonzero_mask_scalar(const std::uint8_t* bytes, std::size_t count) noexcept;
std::uint64_t nonzero_mask_avx2(const std::uint8_t* bytes, std::size_t count) noexcept;
std::uint64_t nonzero_mask(Isa isa, const std::uint8_t* bytes, std::size_t count) noexcept;

}  // namespace lce::kernels
