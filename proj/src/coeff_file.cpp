#include "lgf/coeff_file.hpp"

#include <fstream>
#include <string>

#include "lgf/errors.hpp"

namespace lgf {

namespace {

std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n\v\f";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

BigInt parse_entry(std::string_view text, std::size_t line) {
    try {
        return parse_bigint(std::string(text));
    } catch (const InputError&) {
        throw ParseError("expected an integer, got '" + std::string(text) + "'", line);
    }
}

}  // namespace

std::vector<BigInt> read_coefficients(std::istream& in) {
    std::vector<BigInt> out;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view view(raw);
        if (const auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        view = trim(view);
        if (view.empty()) {
            continue;
        }
        out.push_back(parse_entry(view, line));
    }
    return out;
}

std::vector<BigInt> read_coefficients(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open coefficient file '" + path.string() + "'", 0);
    }
    return read_coefficients(in);
}

std::vector<BigInt> parse_inline_coefficients(std::string_view text) {
    std::vector<BigInt> out;
    std::size_t pos = 0;
    std::size_t index = 1;
    while (true) {
        const auto comma = text.find(',', pos);
        const auto item = trim(text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos));
        out.push_back(parse_entry(item, index));
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
        ++index;
    }
    return out;
}

}  // namespace lgf
