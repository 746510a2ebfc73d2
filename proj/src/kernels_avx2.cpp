// Built with -mavx2; only entered after isa_available(Isa::avx2) holds.

#include <immintrin.h>

#include "lce/kernels.hpp"

namespace lce::kernels {

namespace {

inline __m256i gather_union(const SubsetUnion& u, __m256i sets, __m128i shift) {
  const __m256i low_index = _mm256_and_si256(sets, _mm256_set1_epi64x(static_cast<long long>(u.low_mask())));
  const __m256i high_index = _mm256_srl_epi64(sets, shift);
  const auto* low = reinterpret_cast<const long long*>(u.low_data());
  const auto* high = reinterpret_cast<const long long*>(u.high_data());
  return _mm256_or_si256(_mm256_i64gather_epi64(low, low_index, 8),
                         _mm256_i64gather_epi64(high, high_index, 8));
}

}  // namespace

void good_sets_avx2(const GoodnessTables& t, SubsetMask first, std::size_t count,
                    SubsetMask* out) noexcept {
  const __m256i full = _mm256_set1_epi64x(static_cast<long long>(t.full));
  const __m256i step = _mm256_set1_epi64x(4);
  const __m128i pos_shift = _mm_cvtsi32_si128(static_cast<int>(t.positive.low_bits()));
  const __m128i neg_shift = _mm_cvtsi32_si128(static_cast<int>(t.negative.low_bits()));
  __m256i inside = _mm256_add_epi64(_mm256_set1_epi64x(static_cast<long long>(first)),
                                    _mm256_setr_epi64x(0, 1, 2, 3));
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256i outside = _mm256_andnot_si256(inside, full);
    const __m256i reach_in = gather_union(t.positive, inside, pos_shift);
    const __m256i reach_out = gather_union(t.positive, outside, pos_shift);
    const __m256i boundary = _mm256_or_si256(_mm256_and_si256(inside, reach_out),
                                             _mm256_and_si256(outside, reach_in));
    const __m256i blocked = gather_union(t.negative, boundary, neg_shift);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_andnot_si256(blocked, outside));
    inside = _mm256_add_epi64(inside, step);
  }
  if (i < count) good_sets_scalar(t, first + i, count - i, out + i);
}

std::uint64_t nonzero_mask_avx2(const std::uint8_t* bytes, std::size_t count) noexcept {
  const __m256i zero = _mm256_setzero_si256();
  std::uint64_t mask = 0;
  std::size_t i = 0;
  for (; i + 32 <= count; i += 32) {
    const __m256i chunk = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bytes + i));
    const auto zeros = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(chunk, zero)));
    mask |= static_cast<std::uint64_t>(~zeros) << i;
  }
  if (i < count) mask |= nonzero_mask_scalar(bytes + i, count - i) << i;
  return mask;
}

}  // namespace lce::kernels
