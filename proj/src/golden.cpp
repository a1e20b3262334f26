#include "holo24/golden.hpp"

#include <stdexcept>

namespace holo24::golden {

const std::vector<ModuleTable>& module_tables() {
    static const std::vector<ModuleTable> tables = {
        {"g2.1", "G2,1", {"1", "0"}, 2, "G2 level 1 module table", {
        {{0, 0}, "0", "0", "0"},
        {{1, 0}, "2/5", "2/3", "-2/3"},
        }},
        {"a2.3", "A2,3", {"1", "0"}, 10, "A2 level 3 module table", {
        {{0, 0}, "0", "0", "0"},
        {{1, 0}, "2/9", "2/3", "-1/3"},
        {{0, 1}, "2/9", "1/3", "-2/3"},
        {{2, 0}, "5/9", "4/3", "-2/3"},
        {{0, 2}, "5/9", "2/3", "-4/3"},
        {{1, 1}, "1/2", "1", "-1"},
        {{3, 0}, "1", "2", "-1"},
        {{0, 3}, "1", "1", "-2"},
        {{2, 1}, "8/9", "5/3", "-4/3"},
        {{1, 2}, "8/9", "4/3", "-5/3"},
        }},
        {"a1.1", "A1,1", {}, 2, "A1 level 1 module table", {
        {{0}, "0", "", ""},
        {{1}, "1/4", "", ""},
        }},
        {"a5.3", "A5,3", {"0", "0", "2/3", "0", "0"}, 56, "A5 level 3 module table", {
        {{0, 0, 0, 0, 0}, "0", "0", "0"},
        {{1, 0, 0, 0, 0}, "35/108", "1/3", "-1/3"},
        {{0, 0, 0, 0, 1}, "35/108", "1/3", "-1/3"},
        {{0, 1, 0, 0, 0}, "14/27", "2/3", "-2/3"},
        {{0, 0, 0, 1, 0}, "14/27", "2/3", "-2/3"},
        {{0, 0, 1, 0, 0}, "7/12", "1", "-1"},
        {{2, 0, 0, 0, 0}, "20/27", "2/3", "-2/3"},
        {{0, 0, 0, 0, 2}, "20/27", "2/3", "-2/3"},
        {{0, 2, 0, 0, 0}, "32/27", "4/3", "-4/3"},
        {{0, 0, 0, 2, 0}, "32/27", "4/3", "-4/3"},
        {{0, 0, 2, 0, 0}, "4/3", "2", "-2"},
        {{1, 1, 0, 0, 0}, "11/12", "1", "-1"},
        {{0, 0, 0, 1, 1}, "11/12", "1", "-1"},
        {{1, 0, 1, 0, 0}, "26/27", "4/3", "-4/3"},
        {{0, 0, 1, 0, 1}, "26/27", "4/3", "-4/3"},
        {{1, 0, 0, 1, 0}, "95/108", "1", "-1"},
        {{0, 1, 0, 0, 1}, "95/108", "1", "-1"},
        {{1, 0, 0, 0, 1}, "2/3", "2/3", "-2/3"},
        {{0, 1, 1, 0, 0}, "131/108", "5/3", "-5/3"},
        {{0, 0, 1, 1, 0}, "131/108", "5/3", "-5/3"},
        {{0, 1, 0, 1, 0}, "10/9", "4/3", "-4/3"},
        {{3, 0, 0, 0, 0}, "5/4", "1", "-1"},
        {{0, 0, 0, 0, 3}, "5/4", "1", "-1"},
        {{0, 3, 0, 0, 0}, "2", "2", "-2"},
        {{0, 0, 0, 3, 0}, "2", "2", "-2"},
        {{0, 0, 3, 0, 0}, "9/4", "3", "-3"},
        {{2, 1, 0, 0, 0}, "38/27", "4/3", "-4/3"},
        {{0, 0, 0, 1, 2}, "38/27", "4/3", "-4/3"},
        {{2, 0, 1, 0, 0}, "155/108", "5/3", "-5/3"},
        {{0, 0, 1, 0, 2}, "155/108", "5/3", "-5/3"},
        {{2, 0, 0, 1, 0}, "4/3", "4/3", "-4/3"},
        {{0, 1, 0, 0, 2}, "4/3", "4/3", "-4/3"},
        {{2, 0, 0, 0, 1}, "119/108", "1", "-1"},
        {{1, 0, 0, 0, 2}, "119/108", "1", "-1"},
        {{1, 2, 0, 0, 0}, "179/108", "5/3", "-5/3"},
        {{0, 0, 0, 2, 1}, "179/108", "5/3", "-5/3"},
        {{1, 0, 2, 0, 0}, "191/108", "7/3", "-7/3"},
        {{0, 0, 2, 0, 1}, "191/108", "7/3", "-7/3"},
        {{1, 0, 0, 2, 0}, "19/12", "5/3", "-5/3"},
        {{0, 2, 0, 0, 1}, "19/12", "5/3", "-5/3"},
        {{0, 2, 1, 0, 0}, "215/108", "7/3", "-7/3"},
        {{0, 0, 1, 2, 0}, "215/108", "7/3", "-7/3"},
        {{0, 2, 0, 1, 0}, "50/27", "2", "-2"},
        {{0, 1, 0, 2, 0}, "50/27", "2", "-2"},
        {{0, 0, 2, 1, 0}, "56/27", "8/3", "-8/3"},
        {{0, 1, 2, 0, 0}, "56/27", "8/3", "-8/3"},
        {{1, 1, 1, 0, 0}, "5/3", "2", "-2"},
        {{0, 0, 1, 1, 1}, "5/3", "2", "-2"},
        {{1, 1, 0, 1, 0}, "167/108", "5/3", "-5/3"},
        {{0, 1, 0, 1, 1}, "167/108", "5/3", "-5/3"},
        {{1, 1, 0, 0, 1}, "35/27", "4/3", "-4/3"},
        {{1, 0, 0, 1, 1}, "35/27", "4/3", "-4/3"},
        {{1, 0, 1, 1, 0}, "44/27", "2", "-2"},
        {{0, 1, 1, 0, 1}, "44/27", "2", "-2"},
        {{1, 0, 1, 0, 1}, "49/36", "5/3", "-5/3"},
        {{0, 1, 1, 1, 0}, "23/12", "7/3", "-7/3"},
        }},
        {"d4.3", "D4,3", {}, 24, "D4 level 3 module table", {
        {{0, 0, 0, 0}, "0", "", ""},
        {{1, 0, 0, 0}, "7/18", "", ""},
        {{0, 0, 1, 0}, "7/18", "", ""},
        {{0, 0, 0, 1}, "7/18", "", ""},
        {{0, 1, 0, 0}, "2/3", "", ""},
        {{2, 0, 0, 0}, "8/9", "", ""},
        {{0, 0, 2, 0}, "8/9", "", ""},
        {{0, 0, 0, 2}, "8/9", "", ""},
        {{1, 1, 0, 0}, "7/6", "", ""},
        {{0, 1, 1, 0}, "7/6", "", ""},
        {{0, 1, 0, 1}, "7/6", "", ""},
        {{1, 0, 1, 0}, "5/6", "", ""},
        {{1, 0, 0, 1}, "5/6", "", ""},
        {{0, 0, 1, 1}, "5/6", "", ""},
        {{3, 0, 0, 0}, "3/2", "", ""},
        {{0, 0, 3, 0}, "3/2", "", ""},
        {{0, 0, 0, 3}, "3/2", "", ""},
        {{1, 0, 1, 1}, "4/3", "", ""},
        {{2, 0, 1, 0}, "25/18", "", ""},
        {{2, 0, 0, 1}, "25/18", "", ""},
        {{1, 0, 2, 0}, "25/18", "", ""},
        {{0, 0, 2, 1}, "25/18", "", ""},
        {{1, 0, 0, 2}, "25/18", "", ""},
        {{0, 0, 1, 2}, "25/18", "", ""},
        }},
    };
    return tables;
}

const ModuleTable& module_table(const std::string& key) {
    for (const auto& t : module_tables())
        if (t.key == key) return t;
    throw std::invalid_argument("unknown module table '" + key + "'");
}

const Modular& modular() {
    static const Modular m = {
        {{-3, "1"}, {0, "-12"}, {3, "66"}},
        "66",
        {
            {1, 6, {{1, "1"}, {2, "12"}}},
            {-1, -6, {{-1, "1"}, {0, "-12"}}},
            {-2, -12, {{-2, "1"}, {-1, "-24"}, {0, "252"}}},
            {-3, -18, {{-3, "1"}, {-2, "-36"}, {-1, "594"}, {0, "-5844"}}},
        },
        "129140163",
        {4, -36, -12, 24},
    };
    return m;
}

const std::vector<Case>& cases() {
    static const std::vector<Case> all = {
        {"e6g2",
         {"E6,3", "G2,1", "G2,1", "G2,1"},
         {{"0", "0", "0", "0", "0", "0"}, {"1", "0"}, {"1", "0"}, {"1", "0"}},
         "2", "1", "E6,3 A2,1 A2,1 A2,1", 102, 120, 312, "12",
         {"A11,1", "C11,1", "D7,1", "E6,1"},
         {"A11,1 D7,1 E6,1", "E6,1 E6,1 E6,1 E6,1"},
         "E6,1 E6,1 E6,1 E6,1", "e6_4", "sigma6",
         "E6,3 G2,1^3 uniqueness chain"},
        {"a2x6",
         {"A2,3", "A2,3", "A2,3", "A2,3", "A2,3", "A2,3"},
         {{"1", "0"}, {"0", "0"}, {"0", "0"}, {"0", "0"}, {"0", "0"}, {"0", "0"}},
         "2", "1", "A2,3 A2,3 A2,3 A2,3 A2,3 A2,3", 48, 48, 168, "6",
         {"A5,1", "A11,1", "C5,1", "D4,1", "D7,2", "E6,2", "E7,3"},
         {"A5,1 A5,1 A5,1 A5,1 D4,1", "D4,1 D4,1 D4,1 D4,1 D4,1 D4,1", "A5,1 E7,3", "A5,1 C5,2 E6,2"},
         "D4,1 D4,1 D4,1 D4,1 D4,1 D4,1", "d4_6", "sigma2",
         "A2,3^6 uniqueness chain"},
        {"a5d4",
         {"A5,3", "D4,3", "A1,1", "A1,1", "A1,1"},
         {{"0", "0", "2/3", "0", "0"}, {"0", "0", "0", "0"}, {"0"}, {"0"}, {"0"}},
         "2", "1", "A2,3 A2,3 U(1) D4,3 A1,1 A1,1 A1,1", 54, 72, 168, "6",
         {"A5,1", "A11,1", "C5,1", "D4,1", "D7,2", "E6,2", "E7,3"},
         {"A5,1 A5,1 A5,1 A5,1 D4,1", "D4,1 D4,1 D4,1 D4,1 D4,1 D4,1", "A5,1 E7,3", "A5,1 C5,2 E6,2"},
         "D4,1 D4,1 D4,1 D4,1 D4,1 D4,1", "d4_6", "sigma4",
         "A5,3 D4,3 A1,1^3 uniqueness chain"},
    };
    return all;
}

const Case& case_by_id(const std::string& id) {
    for (const auto& c : cases())
        if (c.id == id) return c;
    throw std::invalid_argument("unknown case '" + id + "'");
}

const LatticeFacts& lattice_facts() {
    static const LatticeFacts f = {
        {{"e6_4", 9, 288, 48, 312}, {"d4_6", 64, 144, 2160, 168}},
        "4/9",
        "1",
        40,
        {{"sigma6", 102}, {"sigma2", 48}, {"sigma4", 54}},
        {{"sigma6", "E6,3 A2,1 A2,1 A2,1"},
         {"sigma2", "A2,3 A2,3 A2,3 A2,3 A2,3 A2,3"},
         {"sigma4", "A2,3 A2,3 D4,3 A1,1 A1,1 A1,1 U(1)"}},
    };
    return f;
}

}  // namespace holo24::golden
