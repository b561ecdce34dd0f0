#include "conjucode/f4.hpp"

#include <cctype>

#include "conjucode/errors.hpp"

namespace conjucode {

char f4_symbol(F4 x) {
    static constexpr char kSymbols[] = {'0', '1', 'w', 'W'};
    return kSymbols[x.code()];
}

F4 f4_from_symbol(char c, std::size_t position) {
    switch (c) {
        case '0': return F4::zero();
        case '1': return F4::one();
        case 'w': return F4::w();
        case 'W': return F4::w2();
        default: throw ParseError(std::string("unknown GF(4) symbol '") + c + "'", position);
    }
}

F4Vector parse_f4_vector(std::string_view text) {
    F4Vector out;
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_space();
    if (i == text.size()) throw ParseError("empty vector", i);
    for (;;) {
        skip_space();
        if (i == text.size()) throw ParseError("expected symbol", i);
        out.push_back(f4_from_symbol(text[i], i));
        ++i;
        skip_space();
        if (i == text.size()) return out;
        if (text[i] != ',') throw ParseError("expected ','", i);
        ++i;
    }
}

std::string format_f4_vector(const F4Vector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += f4_symbol(v[i]);
    }
    return s;
}

}  // namespace conjucode
