#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "herbrand/catalog.hpp"
#include "herbrand/errors.hpp"
#include "herbrand/filtration.hpp"
#include "herbrand/rational.hpp"

namespace herbrand {

// On-disk description of an extension (conventional suffix .ext). A
// document is exactly one of: an explicit order sequence, a break list, or
// a catalog family reference. The line-oriented text grammar:
//
//   p = <prime>
//   orders = <int> <int> ... <int>        # indices -1, 0, 1, ...
// or
//   p = <prime>
//   group = <int>
//   break <index> -> <order>              # one line per break
// or
//   family = <name>
//   param <key> = <int>
//   expect <key> = <rational>             # optional expected-value override
//
// '#' starts a comment; whitespace around '=' and '->' is insignificant.
// A JSON mirror is emitted on request; integers that fit in 64 bits emit
// as JSON numbers, larger ones as decimal strings.

struct orders_document {
    Int residue_char;
    std::vector<Int> orders;
    bool operator==(const orders_document&) const = default;
};

struct break_directive {
    std::int64_t index = 0;
    Int order_after;
    bool operator==(const break_directive&) const = default;
};

struct breaks_document {
    Int residue_char;
    Int group_order;
    std::vector<break_directive> breaks;
    bool operator==(const breaks_document&) const = default;
};

struct catalog_document {
    std::string family;
    std::map<std::string, Int> params;
    std::map<std::string, Rat> expect;  // expected-value overrides, keys e/b/phi_b/a
    bool operator==(const catalog_document&) const = default;
};

using extension_spec = std::variant<orders_document, breaks_document, catalog_document>;

enum class spec_kind { orders, breaks, catalog };

inline spec_kind kind_of(const extension_spec& doc) {
    return static_cast<spec_kind>(doc.index());
}

inline const char* to_string(spec_kind k) {
    switch (k) {
        case spec_kind::orders: return "orders";
        case spec_kind::breaks: return "breaks";
        case spec_kind::catalog: return "catalog";
    }
    return "?";
}

enum class emit_format { text, json };

// JSON building blocks shared with the CLI: rationals are always
// {"num", "den"} decimal strings; integers are numbers when they fit.
inline nlohmann::json json_int(const Int& value) {
    if (value >= std::numeric_limits<std::int64_t>::min() &&
        value <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(value);
    }
    return value.str();
}

inline nlohmann::json json_rat(const Rat& value) {
    return {{"num", numerator(value).str()}, {"den", denominator(value).str()}};
}

namespace detail {

struct source_location {
    int line = 1;
    int column = 1;
};

[[noreturn]] inline void fail_at(parse_errc kind, source_location loc,
                                 const std::string& message) {
    throw parse_error(kind, loc.line, loc.column, message);
}

// Single-line scanner; tracks the column for diagnostics.
class line_cursor {
  public:
    line_cursor(std::string_view text, int line_no) : text_(text), line_(line_no) {}

    source_location here() {
        skip_ws();
        return {line_, static_cast<int>(pos_) + 1};
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    std::string word() {
        source_location loc = here();
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_')) {
            ++pos_;
        }
        if (pos_ == start) fail_at(parse_errc::syntax, loc, "expected a word");
        return std::string(text_.substr(start, pos_ - start));
    }

    void expect(char c) {
        source_location loc = here();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            fail_at(parse_errc::syntax, loc, std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    void expect_arrow() {
        source_location loc = here();
        if (text_.substr(pos_, 2) != "->") {
            fail_at(parse_errc::syntax, loc, "expected '->'");
        }
        pos_ += 2;
    }

    //

    Int integer() { return *number<Int>("expected an integer", parse_integer); }

    Rat rational() {
        return *number<Rat>("expected a rational (n, n/d or decimal)", parse_rational);
    }

    void expect_end() {
        if (!at_end()) {
            fail_at(parse_errc::syntax, here(), "unexpected trailing characters");
        }
    }

  private:
    template <typename T>
    std::optional<T> number(const char* what, std::optional<T> (*parse)(std::string_view)) {
        source_location loc = here();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            char c = text_[pos_];
            if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '.') break;
            ++pos_;
        }
        auto value = parse(text_.substr(start, pos_ - start));
        if (!value) fail_at(parse_errc::syntax, loc, what);
        return value;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

inline const std::vector<std::string>& expected_keys() {
    static const std::vector<std::string> keys{"e", "b", "phi_b", "a"};
    return keys;
}

}  // namespace detail

// Expands a break list into the order sequence it abbreviates: the group
// order holds up to the first break and drops at each one.
inline ramification_filtration resolve(const extension_spec& doc);

inline std::optional<catalog_entry> resolve_catalog(const extension_spec& doc) {
    const auto* cat = std::get_if<catalog_document>(&doc);
    if (!cat) return std::nullopt;
    catalog_entry entry = make_catalog_entry(cat->family, cat->params);
    for (const auto& [key, value] : cat->expect) {
        if (std::find(detail::expected_keys().begin(), detail::expected_keys().end(), key) ==
            detail::expected_keys().end()) {
            throw catalog_error(catalog_errc::unexpected_param,
                                "unknown expected-value key '" + key + "'");
        }
        entry.expected[key] = {value, provenance::user_supplied};
    }
    return entry;
}

inline ramification_filtration resolve(const extension_spec& doc) {
    if (const auto* ord = std::get_if<orders_document>(&doc)) {
        return ramification_filtration(ord->residue_char, ord->orders);
    }
    if (const auto* brk = std::get_if<breaks_document>(&doc)) {
        if (brk->breaks.empty()) {
            throw error("break list is empty");
        }
        std::vector<break_directive> breaks = brk->breaks;
        std::sort(breaks.begin(), breaks.end(),
                  [](const break_directive& a, const break_directive& b) {
                      return a.index < b.index;
                  });
        Int previous = brk->group_order;
        for (const break_directive& b : breaks) {
            if (b.index < 0) throw error("break index must be >= 0");
            if (b.order_after >= previous) {
                throw error("break at " + std::to_string(b.index) +
                            " does not drop the order");
            }
            previous = b.order_after;
        }
        detail::check_length(Int(breaks.back().index) + 3);
        std::vector<Int> orders;
        orders.reserve(static_cast<std::size_t>(breaks.back().index) + 3);
        Int current = brk->group_order;
        std::size_t next_break = 0;
        for (std::int64_t i = -1; i <= breaks.back().index + 1; ++i) {
            orders.push_back(current);
            if (next_break < breaks.size() && breaks[next_break].index == i) {
                current = breaks[next_break].order_after;
                ++next_break;
            }
        }
        return ramification_filtration(brk->residue_char, std::move(orders));
    }
    return resolve_catalog(doc)->filtration;
}

inline extension_spec parse(std::string_view text) {
    using detail::source_location;

    std::optional<std::pair<Int, source_location>> p;
    std::optional<std::pair<std::vector<Int>, source_location>> orders;
    std::optional<std::pair<Int, source_location>> group;
    std::vector<break_directive> breaks;
    std::optional<source_location> first_break;
    std::optional<std::pair<std::string, source_location>> family;
    std::map<std::string, Int> params;
    std::map<std::string, Rat> expects;
    std::optional<source_location> first_param;

    auto forbid = [&](const char* directive, bool clash, const char* other,
                      source_location loc) {
        if (clash) {
            detail::fail_at(parse_errc::syntax, loc,
                            std::string("directive '") + directive +
                                "' cannot be combined with '" + other + "'");
        }
    };

    int line_no = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(begin, end - begin);
        begin = end + 1;
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }

        detail::line_cursor cur(raw, line_no);
        if (cur.at_end()) {
            if (end == text.size()) break;
            continue;
        }
        source_location loc = cur.here();
        std::string directive = cur.word();

        if (directive == "p") {
            if (p) detail::fail_at(parse_errc::duplicate_directive, loc, "duplicate 'p'");
            forbid("p", family.has_value() || !params.empty() || !expects.empty(),
                   "family", loc);
            cur.expect('=');
            p = {cur.integer(), loc};
            cur.expect_end();
        } else if (directive == "orders") {
            if (orders) {
                detail::fail_at(parse_errc::duplicate_directive, loc, "duplicate 'orders'");
            }
            forbid("orders", group.has_value() || first_break.has_value(), "group/break", loc);
            forbid("orders", family.has_value() || !params.empty() || !expects.empty(),
                   "family", loc);
            cur.expect('=');
            std::vector<Int> values;
            values.push_back(cur.integer());
            while (!cur.at_end()) values.push_back(cur.integer());
            orders = {std::move(values), loc};
        } else if (directive == "group") {
            if (group) {
                detail::fail_at(parse_errc::duplicate_directive, loc, "duplicate 'group'");
            }
            forbid("group", orders.has_value(), "orders", loc);
            forbid("group", family.has_value() || !params.empty() || !expects.empty(),
                   "family", loc);
            cur.expect('=');
            group = {cur.integer(), loc};
            cur.expect_end();
        } else if (directive == "break") {
            forbid("break", orders.has_value(), "orders", loc);
            forbid("break", family.has_value() || !params.empty() || !expects.empty(),
                   "family", loc);
            Int index = cur.integer();
            cur.expect_arrow();
            Int after = cur.integer();
            cur.expect_end();
            if (index < 0) {
                detail::fail_at(parse_errc::validation, loc, "break index must be >= 0");
            }
            if (index > detail::max_filtration_length) {
                detail::fail_at(parse_errc::validation, loc,
                                "break index " + index.str() + " is out of range");
            }
            std::int64_t idx = static_cast<std::int64_t>(index);
            for (const break_directive& b : breaks) {
                if (b.index == idx) {
                    detail::fail_at(parse_errc::duplicate_directive, loc,
                                    "duplicate break index " + index.str());
                }
            }
            if (!first_break) first_break = loc;
            breaks.push_back({idx, std::move(after)});
        } else if (directive == "family") {
            if (family) {
                detail::fail_at(parse_errc::duplicate_directive, loc, "duplicate 'family'");
            }
            forbid("family",
                   p.has_value() || orders.has_value() || group.has_value() ||
                       first_break.has_value(),
                   "p/orders/group/break", loc);
            cur.expect('=');
            family = {cur.word(), loc};
            cur.expect_end();
        } else if (directive == "param" || directive == "expect") {
            forbid(directive.c_str(),
                   p.has_value() || orders.has_value() || group.has_value() ||
                       first_break.has_value(),
                   "p/orders/group/break", loc);
            std::string key = cur.word();
            cur.expect('=');
            if (directive == "param") {
                if (params.count(key)) {
                    detail::fail_at(parse_errc::duplicate_directive, loc,
                                    "duplicate param '" + key + "'");
                }
                params[key] = cur.integer();
            } else {
                if (expects.count(key)) {
                    detail::fail_at(parse_errc::duplicate_directive, loc,
                                    "duplicate expect '" + key + "'");
                }
                if (std::find(detail::expected_keys().begin(), detail::expected_keys().end(),
                              key) == detail::expected_keys().end()) {
                    detail::fail_at(parse_errc::validation, loc,
                                    "unknown expected-value key '" + key + "'");
                }
                expects[key] = cur.rational();
            }
            cur.expect_end();
            if (!first_param) first_param = loc;
        } else {
            detail::fail_at(parse_errc::unknown_directive, loc,
                            "unknown directive '" + directive + "'");
        }
        if (end == text.size()) break;
    }

    // Assemble and validate the document.
    auto wrap_validation = [](source_location loc, auto&& build) -> extension_spec {
        try {
            return build();
        } catch (const parse_error&) {
            throw;
        } catch (const error& e) {
            detail::fail_at(parse_errc::validation, loc, e.what());
        }
    };

    if (family) {
        return wrap_validation(family->second, [&]() -> extension_spec {
            catalog_document doc{family->first, params, expects};
            resolve_catalog(extension_spec(doc));  // dry run: dispatch + validate
            return doc;
        });
    }
    if (orders) {
        if (!p) {
            detail::fail_at(parse_errc::syntax, orders->second,
                            "'orders' requires a 'p' directive");
        }
        return wrap_validation(orders->second, [&]() -> extension_spec {
            orders_document doc{p->first, orders->first};
            resolve(extension_spec(doc));  // dry run
            return doc;
        });
    }
    if (group || first_break) {
        if (!group) {
            detail::fail_at(parse_errc::syntax, *first_break,
                            "'break' requires a 'group' directive");
        }
        if (!first_break) {
            detail::fail_at(parse_errc::syntax, group->second,
                            "'group' requires at least one 'break'");
        }
        if (!p) {
            detail::fail_at(parse_errc::syntax, group->second,
                            "'group' requires a 'p' directive");
        }
        std::sort(breaks.begin(), breaks.end(),
                  [](const break_directive& a, const break_directive& b) {
                      return a.index < b.index;
                  });
        return wrap_validation(group->second, [&]() -> extension_spec {
            breaks_document doc{p->first, group->first, breaks};
            resolve(extension_spec(doc));  // dry run
            return doc;
        });
    }
    if (first_param) {
        detail::fail_at(parse_errc::syntax, *first_param,
                        "'param'/'expect' requires a 'family' directive");
    }
    if (p) {
        detail::fail_at(parse_errc::syntax, p->second,
                        "'p' needs 'orders' or 'group'/'break' directives");
    }
    detail::fail_at(parse_errc::syntax, {line_no > 0 ? line_no : 1, 1},
                    "empty document: expected 'orders', 'group'/'break' or 'family'");
}

inline std::string emit(const extension_spec& doc, emit_format format = emit_format::text) {
    if (format == emit_format::text) {
        std::string out;
        if (const auto* ord = std::get_if<orders_document>(&doc)) {
            out += "p = " + ord->residue_char.str() + "\n";
            out += "orders =";
            for (const Int& g : ord->orders) out += " " + g.str();
            out += "\n";
        } else if (const auto* brk = std::get_if<breaks_document>(&doc)) {
            out += "p = " + brk->residue_char.str() + "\n";
            out += "group = " + brk->group_order.str() + "\n";
            std::vector<break_directive> sorted = brk->breaks;
            std::sort(sorted.begin(), sorted.end(),
                      [](const break_directive& a, const break_directive& b) {
                          return a.index < b.index;
                      });
            for (const break_directive& b : sorted) {
                out += "break " + std::to_string(b.index) + " -> " + b.order_after.str() + "\n";
            }
        } else {
            const auto& cat = std::get<catalog_document>(doc);
            out += "family = " + cat.family + "\n";
            for (const auto& [key, value] : cat.params) {
                out += "param " + key + " = " + value.str() + "\n";
            }
            for (const auto& [key, value] : cat.expect) {
                out += "expect " + key + " = " + format_rational(value) + "\n";
            }
        }
        return out;
    }

    nlohmann::json j;
    if (const auto* ord = std::get_if<orders_document>(&doc)) {
        j["kind"] = "orders";
        j["residue_char"] = json_int(ord->residue_char);
        j["orders"] = nlohmann::json::array();
        for (const Int& g : ord->orders) j["orders"].push_back(json_int(g));
    } else if (const auto* brk = std::get_if<breaks_document>(&doc)) {
        j["kind"] = "breaks";
        j["residue_char"] = json_int(brk->residue_char);
        j["group_order"] = json_int(brk->group_order);
        j["breaks"] = nlohmann::json::array();
        for (const break_directive& b : brk->breaks) {
            j["breaks"].push_back({{"index", b.index}, {"order_after", json_int(b.order_after)}});
        }
    } else {
        const auto& cat = std::get<catalog_document>(doc);
        j["kind"] = "catalog";
        j["family"] = cat.family;
        j["params"] = nlohmann::json::object();
        for (const auto& [key, value] : cat.params) j["params"][key] = json_int(value);
        if (!cat.expect.empty()) {
            j["expect"] = nlohmann::json::object();
            for (const auto& [key, value] : cat.expect) j["expect"][key] = json_rat(value);
        }
    }
    return j.dump() + "\n";
}

}  // namespace herbrand
