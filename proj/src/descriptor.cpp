#include "conjucode/descriptor.hpp"

#include <cctype>
#include <charconv>

#include "conjucode/errors.hpp"

namespace conjucode {

Descriptor parse_descriptor(std::string_view text) {
    Descriptor d;
    bool have_n = false;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        const std::string_view field = text.substr(start, i - start);
        const std::size_t eq = field.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected key=value", start);
        const std::string_view key = field.substr(0, eq);
        const std::string_view value = field.substr(eq + 1);
        const std::size_t value_pos = start + eq + 1;
        if (value.empty()) throw ParseError("empty value for '" + std::string(key) + "'", value_pos);
        if (key == "n") {
            if (have_n) throw ParseError("n given twice", start);
            std::size_t n = 0;
            auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
            if (ec != std::errc{} || end != value.data() + value.size() || n == 0)
                throw ParseError("n must be a positive integer", value_pos);
            d.n = n;
            have_n = true;
        } else if (key == "g" || key == "v") {
            if (d.g || d.v) throw ParseError("exactly one of g= and v= is allowed", start);
            try {
                if (key == "g")
                    d.g = parse_poly(value);
                else
                    d.v = parse_f4_vector(value);
            } catch (const ParseError& e) {
                throw ParseError(e.message(), value_pos + e.position());
            }
        } else {
            throw ParseError("unknown key '" + std::string(key) + "'", start);
        }
    }
    if (!have_n) throw ParseError("missing n=", text.size());
    if (!d.g && !d.v) throw ParseError("missing g= or v=", text.size());
    if (d.v && d.v->size() != d.n)
        throw ParseError("vector has " + std::to_string(d.v->size()) + " entries, expected " + std::to_string(d.n),
                         text.size());
    return d;
}

std::string format_source(const Descriptor& d) {
    if (d.g) return "g=" + to_expanded_string(*d.g);
    if (d.v) return "v=" + format_f4_vector(*d.v);
    return {};
}

std::string format_descriptor(const Descriptor& d) { return "n=" + std::to_string(d.n) + " " + format_source(d); }

AccCode build_code(const Descriptor& d) {
    if (d.g) return acc_from_gen_poly(*d.g, d.n);
    return acc_from_vector(*d.v);
}

}  // namespace conjucode
