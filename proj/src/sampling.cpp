#include "qcstar/sampling.hpp"

namespace qcstar {

Element random_element(const AlgebraPresentation& p, std::mt19937_64& rng, const SampleOptions& opts,
                       const std::function<bool(const Word&)>& keep) {
    const auto& alphabet = p.alphabet();
    std::uniform_int_distribution<std::size_t> n_terms(1, opts.max_terms);
    std::uniform_int_distribution<std::size_t> length(0, opts.max_degree);
    std::uniform_int_distribution<int> symbol(0, static_cast<int>(alphabet->size()) - 1);
    std::uniform_int_distribution<int> num(-opts.max_numerator, opts.max_numerator);
    std::uniform_int_distribution<int> den(1, opts.max_denominator);
    std::uniform_int_distribution<int> qexp(-opts.max_q_exponent, opts.max_q_exponent);

    Element x(alphabet);
    const std::size_t terms = n_terms(rng);
    for (std::size_t t = 0; t < terms; ++t) {
        Word w;
        do {
            w.assign(length(rng), 0);
            for (Symbol& s : w) s = symbol(rng);
        } while (keep && !keep(w));
        int a = 0;
        while (a == 0) a = num(rng);
        x.add_term(w, Laurent::monomial(Rational(a, den(rng)), qexp(rng)));
    }
    return x;
}

}  // namespace qcstar
