#pragma once

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "homology.hpp"
#include "verify.hpp"

namespace superchain {

inline nlohmann::json to_json(const HomologyReport& rep) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : rep.rows)
        rows.push_back({{"m", r.m}, {"dim", r.dim}, {"rank", r.rank}, {"betti", r.betti}});
    return {{"n", rep.n}, {"w", rep.w}, {"h", rep.h}, {"rows", rows}};
}

inline std::string to_csv(const HomologyReport& rep) {
    std::string out = "m,dim,rank,betti\n";
    for (const auto& r : rep.rows)
        out += std::to_string(r.m) + "," + std::to_string(r.dim) + "," +
               std::to_string(r.rank) + "," + std::to_string(r.betti) + "\n";
    return out;
}

inline std::string to_table(const HomologyReport& rep) {
    std::ostringstream out;
    out << "n=" << rep.n << " w=" << rep.w << " h=" << rep.h << "\n";
    out << std::setw(5) << "m" << std::setw(7) << "dim" << std::setw(7) << "rank"
        << std::setw(7) << "betti" << "\n";
    for (const auto& r : rep.rows)
        out << std::setw(5) << r.m << std::setw(7) << r.dim << std::setw(7) << r.rank
            << std::setw(7) << r.betti << "\n";
    return out.str();
}

inline nlohmann::json to_json(const VerificationReport& rep) {
    nlohmann::json j = {{"claim", rep.claim},
                        {"grid", rep.grid},
                        {"pass", rep.pass},
                        {"counterexample", nullptr}};
    if (rep.counterexample)
        j["counterexample"] = {{"word", rep.counterexample->word},
                               {"lhs", rep.counterexample->lhs},
                               {"rhs", rep.counterexample->rhs}};
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    return j;
}

inline std::string to_table(const VerificationReport& rep) {
    std::string out = rep.claim + " [" + rep.grid + "]: " + (rep.pass ? "pass" : "FAIL") + "\n";
    for (const auto& note : rep.notes) out += "  note: " + note + "\n";
    if (rep.counterexample)
        out += "  counterexample: " + rep.counterexample->word +
               "\n    lhs: " + rep.counterexample->lhs +
               "\n    rhs: " + rep.counterexample->rhs + "\n";
    return out;
}

}  // namespace superchain
