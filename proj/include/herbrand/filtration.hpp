#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "herbrand/errors.hpp"
#include "herbrand/rational.hpp"

namespace herbrand {

enum class ramification_class { unramified, tame, wild };

inline const char* to_string(ramification_class c) {
    switch (c) {
        case ramification_class::unramified: return "unramified";
        case ramification_class::tame: return "tame";
        case ramification_class::wild: return "wild";
    }
    return "?";
}

// strict enforces the full set of order-level constraints a Galois
// ramification filtration satisfies; relaxed keeps only what a transition
// function needs (positive, nonincreasing, terminating at 1).
enum class validation_mode { strict, relaxed };

struct filtration_break {
    std::int64_t index = 0;  // lower-numbering index of the drop
    Int order_after;         // group order immediately after it
    bool operator==(const filtration_break&) const = default;
};

struct subextension_degrees {
    Int unramified;  // [K0 : K]
    Int tame;        // [K1 : K0]
    Int wild;        // [L : K1]
    bool operator==(const subextension_degrees&) const = default;
};

// Lower-numbering ramification filtration of a finite Galois extension,
// stored as the sequence of group orders g_-1 >= g_0 >= g_1 >= ... >= 1.
// Only the orders are kept: every quantity computed downstream (transition
// function, breaks, depth transform) depends on the indices (G_0 : G_t)
// alone, never on group elements.
//
// Values are immutable after construction. Trailing 1s are normalized to a
// single terminal 1, and equality is defined on the normalized form.
class ramification_filtration {
  public:
    ramification_filtration(Int residue_char, std::vector<Int> orders,
                            validation_mode mode = validation_mode::strict)
        : residue_char_(std::move(residue_char)), orders_(std::move(orders)) {
        validate(mode);
        normalize();
    }

    const Int& residue_char() const { return residue_char_; }

    // Normalized orders, g_-1 first, single terminal 1.
    const std::vector<Int>& orders() const { return orders_; }

    // Index of the last stored order (which is 1); -1 for the trivial
    // extension. g_i = 1 for every i beyond it.
    std::int64_t last_index() const {
        return static_cast<std::int64_t>(orders_.size()) - 2;
    }

    bool trivial() const { return orders_.size() == 1; }

    // g_i for integer i >= -1, extended by 1 beyond the stored range.
    const Int& order_at_index(std::int64_t i) const {
        if (i < -1) {
            throw filtration_error(filtration_errc::index_below_minus_one,
                                   "ramification groups are indexed from -1");
        }
        std::uint64_t pos = static_cast<std::uint64_t>(i + 1);
        if (pos >= orders_.size()) return one_;
        return orders_[pos];
    }

    // G_t for real t >= -1 is G_i with i the smallest integer >= t.
    const Int& order_at(const Rat& t) const {
        if (t < -1) {
            throw filtration_error(filtration_errc::index_below_minus_one,
                                   "ramification groups are indexed from -1");
        }
        Int i = rat_ceil(t);
        if (i > last_index()) return one_;
        return order_at_index(static_cast<std::int64_t>(i));
    }

    // e(L/K) = |G_0|.
    const Int& ramification_index() const { return order_at_index(0); }

    // |G_1|, a power of the residue characteristic.
    const Int& wild_order() const { return order_at_index(1); }

    ramification_class classification() const {
        if (ramification_index() == 1) return ramification_class::unramified;
        if (wild_order() == 1) return ramification_class::tame;
        return ramification_class::wild;
    }

    // Largest i with g_i > 1: the break b of the extension. -1 for
    // unramified nontrivial extensions; no break exists for L = K.
    std::int64_t largest_break() const {
        require_nontrivial();
        for (std::int64_t i = last_index(); i >= -1; --i) {
            if (order_at_index(i) > 1) return i;
        }
        return -1;  // unreachable: nontrivial means g_-1 > 1
    }

    // Indices i >= 0 where the filtration drops, with the order it drops
    // to. Empty for unramified nontrivial extensions.
    std::vector<filtration_break> break_sequence() const {
        require_nontrivial();
        std::vector<filtration_break> breaks;
        for (std::int64_t i = 0; i <= last_index(); ++i) {
            if (order_at_index(i) > order_at_index(i + 1)) {
                breaks.push_back({i, order_at_index(i + 1)});
            }
        }
        return breaks;
    }

    // Degrees along the tower L / K1 / K0 / K: unramified part g_-1/g_0,
    // tame part g_0/g_1, wild part g_1. The product is |G|.
    subextension_degrees tower_degrees() const {
        return {order_at_index(-1) / order_at_index(0),
                order_at_index(0) / order_at_index(1), order_at_index(1)};
    }

    bool operator==(const ramification_filtration&) const = default;

  private:
    static void fail(filtration_errc code, const std::string& message) {
        throw filtration_error(code, message);
    }

    void require_nontrivial() const {
        if (trivial()) {
            fail(filtration_errc::trivial_extension,
                 "trivial extension has no ramification break");
        }
    }

    void validate(validation_mode mode) const {
        if (!is_prime(residue_char_)) {
            fail(filtration_errc::invalid_prime,
                 "residue characteristic " + residue_char_.str() + " is not prime");
        }
        if (orders_.empty()) {
            fail(filtration_errc::empty_orders, "order sequence is empty");
        }
        for (const Int& g : orders_) {
            if (g < 1) {
                fail(filtration_errc::nonpositive_order,
                     "group order " + g.str() + " is not positive");
            }
        }
        for (std::size_t i = 0; i + 1 < orders_.size(); ++i) {
            if (orders_[i] < orders_[i + 1]) {
                fail(filtration_errc::not_nonincreasing,
                     "orders increase at index " + std::to_string(static_cast<long long>(i) - 1));
            }
        }
        if (orders_.back() != 1) {
            fail(filtration_errc::nonterminating_sequence,
                 "order sequence must end at 1");
        }
        if (mode == validation_mode::relaxed) return;

        for (std::size_t i = 0; i + 1 < orders_.size(); ++i) {
            if (orders_[i] % orders_[i + 1] != 0) {
                fail(filtration_errc::not_divisibility_chain,
                     orders_[i + 1].str() + " does not divide " + orders_[i].str());
            }
        }
        const Int& g0 = orders_.size() > 1 ? orders_[1] : orders_[0];
        const Int& g1 = orders_.size() > 2 ? orders_[2] : one_;
        if (!is_power_of(g1, residue_char_)) {
            fail(filtration_errc::wild_part_not_p_power,
                 "|G_1| = " + g1.str() + " is not a power of " + residue_char_.str());
        }
        if ((g0 / g1) % residue_char_ == 0) {
            fail(filtration_errc::tame_quotient_not_coprime,
                 "|G_0/G_1| = " + (g0 / g1).str() + " is divisible by " + residue_char_.str());
        }
        for (std::size_t i = 2; i + 1 < orders_.size(); ++i) {
            if (!is_power_of(orders_[i] / orders_[i + 1], residue_char_)) {
                fail(filtration_errc::higher_quotient_not_p_power,
                     "quotient at index " + std::to_string(static_cast<long long>(i) - 1) +
                         " is not a power of " + residue_char_.str());
            }
        }
    }

    void normalize() {
        while (orders_.size() > 1 && orders_[orders_.size() - 2] == 1) {
            orders_.pop_back();
        }
    }

    static inline const Int one_ = 1;

    Int residue_char_;
    std::vector<Int> orders_;
};

}  // namespace herbrand
