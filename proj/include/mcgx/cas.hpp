// Plain-text exporters: a free group on the generator names plus the relator
// list, in GAP or Magma input syntax. Output is a pure function of the
// presentation (byte-stable for fixed input).

#pragma once

#include <string>

#include "mcgx/presentations.hpp"

namespace mcgx {

enum class CasDialect { gap, magma };

inline CasDialect cas_dialect_from_tag(const std::string& s) {
    if (s == "gap") return CasDialect::gap;
    if (s == "magma") return CasDialect::magma;
    throw InvalidParameter("unknown cas dialect: " + s + " (expected gap or magma)");
}

namespace detail {

inline std::string cas_word(const Word& w) {
    std::string out;
    for (const auto& l : w.letters()) {
        if (!out.empty()) out += '*';
        out += "F." + std::to_string(l.sym + 1);
        if (l.exp != 1) out += '^' + l.exp.get_str();
    }
    return out;
}

}  // namespace detail

inline std::string export_cas(const Presentation& p, CasDialect dialect) {
    std::string c = dialect == CasDialect::gap ? "# " : "// ";
    std::string out;
    out += c + std::string(family_tag(p.family)) + " presentation, g = " + std::to_string(p.g) +
           ", r = " + std::to_string(p.r) + "\n";
    if (dialect == CasDialect::gap) {
        out += "F := FreeGroup( ";
        for (std::size_t i = 0; i < p.alphabet.size(); ++i) {
            if (i) out += ", ";
            out += '"' + p.alphabet.name(static_cast<int>(i)) + '"';
        }
        out += " );\n";
    } else {
        out += c + "generators:";
        for (std::size_t i = 0; i < p.alphabet.size(); ++i)
            out += " F." + std::to_string(i + 1) + " = " + p.alphabet.name(static_cast<int>(i));
        out += "\n";
        out += "F := FreeGroup(" + std::to_string(p.alphabet.size()) + ");\n";
    }
    out += "rels := [\n";
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
        out += "  " + c + p.relators[i].first + "\n";
        out += "  " + detail::cas_word(p.relators[i].second);
        if (i + 1 < p.relators.size()) out += ',';
        out += "\n";
    }
    out += "];\n";
    if (dialect == CasDialect::gap)
        out += "G := F / rels;\n";
    else
        out += "G := quo< F | rels >;\n";
    return out;
}

}  // namespace mcgx
