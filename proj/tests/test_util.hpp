#pragma once

#include <random>

#include "structalg/field.hpp"

namespace testutil {

using structalg::GQ;

/// Deterministic small random scalars for property tests.
class Rng {
public:
    explicit Rng(unsigned seed) : gen_(seed) {}

    long small_int(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen_);
    }

    GQ scalar() {
        mpq_class re(small_int(-4, 4), small_int(1, 3));
        mpq_class im(small_int(-4, 4), small_int(1, 3));
        re.canonicalize();
        im.canonicalize();
        return GQ(re, im);
    }

    GQ nonzero() {
        while (true) {
            GQ v = scalar();
            if (!v.is_zero()) return v;
        }
    }

private:
    std::mt19937 gen_;
};

}  // namespace testutil
