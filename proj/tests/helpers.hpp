#pragma once

#include "alg/classes.hpp"

namespace alg::testing {

// Heyting 3-chain 0 < a < 1 (the Godel chain on three elements)
inline FiniteAlgebra heyting3() {
    FiniteAlgebra A = make_godel_chain(3);
    A.rename("heyting3");
    A.set_labels({"0", "a", "1"});
    return A;
}

// Boolean-4 with box: []0 = []a = 0, []b = b, []1 = 1 (an S4, not S5, algebra);
// atoms a = 1, b = 2
inline FiniteAlgebra s4_boolean4() {
    FiniteAlgebra b4 = make_boolean(2);
    std::vector<std::vector<int>> tables = b4.tables();
    tables.push_back({0, 0, 2, 3});  // []
    tables.push_back({0, 1, 3, 3});  // <> = ~[]~
    FiniteAlgebra A("s4b4", 4, Signature::fl_modal(), std::move(tables),
                    {"0", "a", "b", "1"});
    return A;
}

} // namespace alg::testing
