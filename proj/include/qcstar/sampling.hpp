#pragma once

#include <functional>
#include <random>

#include "qcstar/algebra.hpp"

namespace qcstar {

struct SampleOptions {
    std::size_t max_degree = 6;
    std::size_t max_terms = 4;
    int max_numerator = 3;
    int max_denominator = 3;
    int max_q_exponent = 2;
};

/// Random element: up to max_terms words of length <= max_degree with
/// coefficients (a/b) q^e. Only words accepted by `keep` are used.
Element random_element(const AlgebraPresentation& p, std::mt19937_64& rng, const SampleOptions& opts = {},
                       const std::function<bool(const Word&)>& keep = {});

}  // namespace qcstar
