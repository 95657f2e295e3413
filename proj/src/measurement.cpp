#include "dopgain/measurement.hpp"

#include <cmath>
#include <stdexcept>

namespace dopgain {

namespace {
void check_m(double m, const char* who) {
    if (!(std::isfinite(m) && m >= 0.0 && m <= 1.0))
        throw std::domain_error(std::string(who) + ": m must lie in [0, 1]");
}
}  // namespace

double p_singlet(double m) {
    check_m(m, "p_singlet");
    return (1.0 - m * m) / 4.0;
}

double p_triplet(double m) {
    check_m(m, "p_triplet");
    return (3.0 + m * m) / 4.0;
}

double p_same(double m) {
    check_m(m, "p_same");
    return (3.0 + m * m) / 6.0;
}

double p_different(double m) {
    check_m(m, "p_different");
    return (3.0 - m * m) / 6.0;
}

std::size_t OutcomeModel::outcome_index(std::string_view name) const {
    for (std::size_t i = 0; i < outcomes.size(); ++i)
        if (outcomes[i] == name) return i;
    throw std::invalid_argument("OutcomeModel: unknown outcome '" + std::string(name) + "'");
}

OutcomeModel coherent_model() {
    return {"coherent", {"singlet", "triplet"}, {p_singlet, p_triplet}};
}

OutcomeModel incoherent_model() {
    return {"incoherent", {"same", "different"}, {p_same, p_different}};
}

std::size_t sample_outcome(const OutcomeModel& model, double m, RngStream& rng) {
    check_m(m, "sample_outcome");
    if (model.outcomes.empty() || model.outcomes.size() != model.likelihood.size())
        throw std::invalid_argument("sample_outcome: malformed model");
    const double u = rng.uniform01();
    double cumulative = 0.0;
    for (std::size_t i = 0; i + 1 < model.likelihood.size(); ++i) {
        cumulative += model.likelihood[i](m);
        if (u < cumulative) return i;
    }
    return model.likelihood.size() - 1;
}

}  // namespace dopgain
