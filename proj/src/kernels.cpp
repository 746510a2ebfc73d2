#include "lce/kernels.hpp"

#include <stdexcept>

namespace lce::kernels {

const char* to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

std::optional<Isa> parse_isa(std::string_view name) noexcept {
  if (name == "scalar") return Isa::scalar;
  if (name == "avx2") return Isa::avx2;
  return std::nullopt;
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(LCE_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() noexcept { return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

SubsetUnion::SubsetUnion(std::span<const SubsetMask> masks) {
  const std::size_t n = masks.size();
  if (n > kMaxTableVertices) throw std::length_error("subset union table too large");
  low_bits_ = static_cast<unsigned>((n + 1) / 2);
  low_mask_ = (SubsetMask{1} << low_bits_) - 1;
  const unsigned high_bits = static_cast<unsigned>(n) - low_bits_;
  low_.assign(std::size_t{1} << low_bits_, 0);
  high_.assign(std::size_t{1} << high_bits, 0);
  // table[2^j + s] = table[s] | mask_j for s < 2^j
  for (unsigned j = 0; j < low_bits_; ++j) {
    const std::size_t half = std::size_t{1} << j;
    for (std::size_t s = 0; s < half; ++s) low_[half + s] = low_[s] | masks[j];
  }
  for (unsigned j = 0; j < high_bits; ++j) {
    const std::size_t half = std::size_t{1} << j;
    for (std::size_t s = 0; s < half; ++s) high_[half + s] = high_[s] | masks[low_bits_ + j];
  }
}

GoodnessTables make_goodness_tables(const SignedGraph& g) {
  if (!g.has_masks() || g.size() > kMaxTableVertices) {
    throw std::length_error("goodness tables need at most 40 vertices");
  }
  return {SubsetUnion(g.positive_masks()), SubsetUnion(g.negative_masks()), g.full_mask()};
}

void good_sets_scalar(const GoodnessTables& t, SubsetMask first, std::size_t count,
                      SubsetMask* out) noexcept {
  for (std::size_t i = 0; i < count; ++i) {
    const SubsetMask inside = first + i;
    const SubsetMask outside = t.full & ~inside;
    const SubsetMask boundary = (inside & t.positive(outside)) | (outside & t.positive(inside));
    out[i] = outside & ~t.negative(boundary);
  }
}

std::uint64_t nonzero_mask_scalar(const std::uint8_t* bytes, std::size_t count) noexcept {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (bytes[i] != 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

#if !defined(LCE_HAVE_AVX2)
void good_sets_avx2(const GoodnessTables& t, SubsetMask first, std::size_t count,
                    SubsetMask* out) noexcept {
  good_sets_scalar(t, first, count, out);
}

std::uint64_t nonzero_mask_avx2(const std::uint8_t* bytes, std::size_t count) noexcept {
  return nonzero_mask_scalar(bytes, count);
}
#endif

void good_sets(Isa isa, const GoodnessTables& t, SubsetMask first, std::size_t count,
               SubsetMask* out) noexcept {
  if (isa == Isa::avx2) {
    good_sets_avx2(t, first, count, out);
  } else {
    good_sets_scalar(t, first, count, out);
  }
}

std::uint64_t nonzero_mask(Isa isa, const std::uint8_t* bytes, std::size_t count) noexcept {
  return isa == Isa::avx2 ? nonzero_mask_avx2(bytes, count) : nonzero_mask_scalar(bytes, count);
}

}  // namespace lce::kernels
