// Tabulates the exact four-point constant for cycle graphs and a couple of
// Cayley graphs. Delta is reported doubled so everything stays integral.

#include <iostream>

#include <grkit/grkit.hpp>

using namespace grkit;

static void row(const std::string& label, const Graph& g) {
    DistanceMatrix D = all_pairs_distances(g);
    DeltaResult res = delta(D);
    std::cout << label << ": n = " << g.n << ", diameter = " << graph_diameter(D)
              << ", 2*delta = " << res.delta2 << "\n";
}

int main() {
    for (int n = 4; n <= 12; ++n) {
        FiniteGroup cn = construct("cyclic:" + std::to_string(n));
        row("C" + std::to_string(n), cayley_graph(cn, cn.generators()).graph);
    }
    FiniteGroup q16 = construct("dicyclic:4");
    row("Q16 on {a,b}", cayley_graph(q16, q16.generators()).graph);
    FiniteGroup h38 = construct("hsn:3,8");
    row("H(3,8) on {a,b}", cayley_graph(h38, h38.generators()).graph);
    return 0;
}
