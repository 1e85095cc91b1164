#pragma once

#include <functional>
#include <optional>
#include <random>

#include "srbch.hpp"
#include "sum_rank.hpp"

namespace sumrank {

struct DecodeResult {
    enum class Engine { parent, direct, plugin };
    enum class Failure { none, radius_exceeded, budget_exceeded };

    bool ok = false;
    std::vector<Felem> codeword;
    unsigned error_weight = 0;  // wt^0_SR of the correction on success
    Engine engine = Engine::direct;
    Failure failure = Failure::none;
};

/// Optional fast decoder for the parent linearized Reed-Solomon code: given the
/// received word over F_{q^m} and the radius, returns a parent codeword within
/// sum-rank distance t, or nothing.  None ships by default.
using FastLrsDecoder = std::function<std::optional<std::vector<Felem>>(
    const SrBchCode&, const std::vector<Felem>&, unsigned)>;

/// Bounded-distance decoding up to t = floor((delta-1)/2) sum-rank errors.
/// Default engine: decode in the parent LRS code over F_{q^m} (valid because
/// wt_SR(e) <= wt^0_SR(e) <= t), then check the result lies in F^n; when the
/// parent is too large to enumerate, fall back to nearest-codeword enumeration
/// over the SR-BCH code itself; last resort is the plugin.
DecodeResult decode(const SrBchCode& code, const std::vector<Felem>& y,
                    std::uint64_t budget = kDefaultBudget,
                    const FastLrsDecoder* plugin = nullptr);

/// Error vector over F with exact sum-rank weight target (wt^0_SR), built from one
/// random rank-w_i block at a time.
std::vector<Felem> sample_error(const Tower& tw, Partition part, unsigned target_weight,
                                std::mt19937_64& rng);

}  // namespace sumrank
