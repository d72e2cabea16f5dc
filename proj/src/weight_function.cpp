#include "pagraph/weight_function.hpp"

#include <stdexcept>
#include <string>

namespace pagraph {

WeightFunction WeightFunction::tabulated(std::vector<double> head, double tail_s, int k_head,
                                         int k_min) {
    if (k_min < 1)
        throw std::invalid_argument("tabulated weight: k_min must be >= 1");
    if (k_head < k_min)
        throw std::invalid_argument("tabulated weight: k_head must be >= k_min");
    if (static_cast<int>(head.size()) != k_head - k_min)
        throw std::invalid_argument("tabulated weight: head must hold f(k_min)..f(k_head-1)");
    for (double v : head)
        if (!(v >= 0.0))
            throw std::invalid_argument("tabulated weight: head values must be >= 0");
    if (!(k_head + tail_s > 0.0))
        throw std::invalid_argument("tabulated weight: tail k + tail_s must be positive from k_head on");
    return WeightFunction{TabulatedWeight{k_min, k_head, std::move(head), tail_s}};
}

double WeightFunction::operator()(int k) const {
    if (k < 1)
        throw std::domain_error("weight function: degree must be >= 1");
    if (const auto* lin = std::get_if<LinearWeight>(&v_)) {
        const double w = k + lin->s;
        if (!(w > 0.0))
            throw std::domain_error("weight function: k + s <= 0 at k=" + std::to_string(k));
        return w;
    }
    if (std::holds_alternative<ConstantWeight>(v_))
        return 1.0;
    const auto& tab = std::get<TabulatedWeight>(v_);
    if (k >= tab.k_head)
        return k + tab.tail_s;
    if (k < tab.k_min)
        throw std::domain_error("weight function: degree below tabulated range");
    return tab.head[static_cast<std::size_t>(k - tab.k_min)];
}

double WeightFunction::linear_displacement() const {
    if (const auto* lin = std::get_if<LinearWeight>(&v_))
        return lin->s;
    throw std::logic_error("weight function is not linear");
}

std::optional<double> WeightFunction::asymptotic_displacement() const {
    if (const auto* lin = std::get_if<LinearWeight>(&v_))
        return lin->s;
    if (const auto* tab = std::get_if<TabulatedWeight>(&v_))
        return tab->tail_s;
    return std::nullopt;
}

const TabulatedWeight& WeightFunction::tabulated_parts() const {
    if (const auto* tab = std::get_if<TabulatedWeight>(&v_))
        return *tab;
    throw std::logic_error("weight function is not tabulated");
}

double eval_weight(const WeightFunction& f, int k) { return f(k); }

}  // namespace pagraph
