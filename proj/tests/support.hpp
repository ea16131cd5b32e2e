#pragma once

#include <string>
#include <vector>

#include "hyperpoly/text.hpp"

namespace test_support {

inline hyperpoly::Poly poly(const std::string& field, const std::string& coeffs) {
    return hyperpoly::parse_poly(hyperpoly::parse_hyperfield(field), coeffs);
}

inline hyperpoly::Element elem(const std::string& field, const std::string& text) {
    return hyperpoly::parse_element(hyperpoly::parse_hyperfield(field), text);
}

inline std::vector<std::string> formatted(const std::vector<hyperpoly::Poly>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(hyperpoly::format_poly(p));
    return out;
}

// Every coefficient list of length `len` over `carrier`, c_0 varying fastest.
template <class T>
std::vector<std::vector<T>> all_tuples(const std::vector<T>& carrier, std::size_t len) {
    std::vector<std::vector<T>> out(1);
    for (std::size_t i = 0; i < len; ++i) {
        std::vector<std::vector<T>> next;
        for (const auto& x : carrier)
            for (const auto& t : out) {
                auto u = t;
                u.push_back(x);
                next.push_back(std::move(u));
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace test_support
