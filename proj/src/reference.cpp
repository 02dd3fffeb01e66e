#include "ginertia/reference.hpp"

#include <stdexcept>

namespace ginertia::reference {

namespace {

std::vector<BkSpec> parse_all(std::initializer_list<const char*> texts) {
    std::vector<BkSpec> out;
    for (const char* t : texts) out.push_back(BkSpec::parse(t));
    return out;
}

const std::vector<BkSpec>& list_k4() {
    static const std::vector<BkSpec> v = parse_all({
        "B4(3,2;3,2)", "B4(4,3;2,2)", "B4(4,3;3,1)", "B4(5,4;2,1)", "B4(5,2;2,3)",
        "B4(3,4;2,3)", "B4(4,1;3,4)", "B4(5,2;4,1)", "B4(7,3;2,1)", "B4(4,6;2,1)",
        "B4(7,2;2,2)", "B4(3,6;2,2)", "B4(4,2;2,5)", "B4(3,3;2,5)", "B4(7,2;3,1)",
        "B4(3,6;3,1)", "B4(6,1;3,3)", "B4(6,1;4,2)",
    });
    return v;
}

const std::vector<BkSpec>& list_k5() {
    static const std::vector<BkSpec> v = parse_all({
        "B5(2,2;2,2;1)", "B5(2,3;1,2;2)", "B5(3,3;2,1;1)", "B5(3,4;1,1;2)", "B5(3,4;1,2;1)",
        "B5(1,3;1,3;3)", "B5(2,2;1,3;3)", "B5(2,4;2,1;2)", "B5(4,2;3,1;1)", "B5(4,5;1,1;1)",
        "B5(2,5;1,1;3)", "B5(4,3;1,1;3)", "B5(1,4;1,2;4)", "B5(3,2;1,2;4)", "B5(2,5;1,3;1)",
        "B5(4,3;1,3;1)", "B5(1,4;1,4;2)", "B5(3,2;1,4;2)", "B5(5,2;2,1;2)", "B5(3,1;2,3;3)",
        "B5(3,1;2,5;1)", "B5(4,1;3,2;2)", "B5(3,7;1,1;1)", "B5(6,4;1,1;1)", "B5(2,7;1,1;2)",
        "B5(6,3;1,1;2)", "B5(2,4;1,1;5)", "B5(3,3;1,1;5)", "B5(2,7;1,2;1)", "B5(6,3;1,2;1)",
        "B5(1,6;1,2;3)", "B5(5,2;1,2;3)", "B5(1,3;1,2;6)", "B5(2,2;1,2;6)", "B5(1,6;1,3;2)",
        "B5(5,2;1,3;2)", "B5(2,4;1,5;1)", "B5(3,3;1,5;1)", "B5(2,2;1,6;2)", "B5(2,7;2,1;1)",
        "B5(7,2;2,1;1)", "B5(4,2;2,1;4)", "B5(2,3;2,1;5)", "B5(5,1;2,3;2)", "B5(5,1;2,4;1)",
        "B5(3,2;3,1;4)", "B5(6,1;3,2;1)",
    });
    return v;
}

const std::vector<BkSpec>& list_k11() {
    static const std::vector<BkSpec> v = parse_all({
        "B11(1,1,1,2,1;1,1,1,1,1;1)", "B11(2,1,1,1,1;1,1,1,1,1;1)", "B11(1,1,1,1,3;1,1,1,1,1;1)",
        "B11(1,1,1,2,2;1,1,1,1,1;1)", "B11(1,1,2,1,2;1,1,1,1,1;1)", "B11(1,1,2,2,1;1,1,1,1,1;1)",
        "B11(1,1,3,1,1;1,1,1,1,1;1)", "B11(1,2,1,1,2;1,1,1,1,1;1)", "B11(1,2,2,1,1;1,1,1,1,1;1)",
        "B11(1,3,1,1,1;1,1,1,1,1;1)", "B11(2,1,1,1,2;1,1,1,1,1;1)", "B11(2,2,1,1,1;1,1,1,1,1;1)",
        "B11(1,1,1,1,2;1,1,1,1,1;2)", "B11(1,1,2,1,1;1,1,1,1,1;2)", "B11(1,2,1,1,1;1,1,1,1,1;2)",
        "B11(1,1,1,1,1;1,1,1,1,1;3)", "B11(1,1,1,1,2;1,1,1,1,2;1)", "B11(1,1,1,2,1;1,1,1,1,2;1)",
        "B11(1,1,2,1,1;1,1,1,1,2;1)", "B11(1,2,1,1,1;1,1,1,1,2;1)", "B11(1,1,2,1,1;1,1,2,1,1;1)",
        "B11(1,2,1,1,1;1,1,2,1,1;1)", "B11(2,1,1,1,1;1,1,2,1,1;1)", "B11(1,2,1,1,1;1,2,1,1,1;1)",
    });
    return v;
}

const std::vector<BkSpec>& list_k12() {
    static const std::vector<BkSpec> v = parse_all({
        "B12(1,1,1,1,1,2;1,1,1,1,1,1)", "B12(1,1,1,1,2,1;1,1,1,1,1,1)",
        "B12(1,1,1,2,1,1;1,1,1,1,1,1)", "B12(1,1,2,1,1,1;1,1,1,1,1,1)",
        "B12(1,2,1,1,1,1;1,1,1,1,1,1)", "B12(2,1,1,1,1,1;1,1,1,1,1,1)",
    });
    return v;
}

const std::vector<BkSpec>& list_k13() {
    static const std::vector<BkSpec> v = parse_all({"B13(1,1,1,1,1,1;1,1,1,1,1,1;1)"});
    return v;
}

}  // namespace

const std::map<int, int>& b0_counts() {
    static const std::map<int, int> counts = {{4, 18},  {5, 47},  {6, 138}, {7, 161}, {8, 205},
                                              {9, 124}, {10, 78}, {11, 24}, {12, 6},  {13, 1}};
    return counts;
}

const std::map<int, int>& b0_order_histogram_k6_10() {
    static const std::map<int, int> hist = {{10, 4}, {11, 32}, {12, 150}, {13, 520}};
    return hist;
}

bool has_b0_list(int k) { return k == 4 || k == 5 || k == 11 || k == 12 || k == 13; }

const std::vector<BkSpec>& b0_list(int k) {
    switch (k) {
        case 4: return list_k4();
        case 5: return list_k5();
        case 11: return list_k11();
        case 12: return list_k12();
        case 13: return list_k13();
        default: throw std::invalid_argument("b0_list: only k in {4,5,11,12,13} is recorded");
    }
}

}  // namespace ginertia::reference
