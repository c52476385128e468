// Walks through the 16-vertex torus: f-function by both recursions, the index
// polynomials of one random vertex function, and the curvatures.

#include <cliquepoly/cliquepoly.hpp>

#include <iostream>

int main() {
    using namespace cliquepoly;

    const Graph torus = torus_16();
    std::cout << "f-vector (oracle)   " << f_vector_bruteforce(torus) << "\n";
    std::cout << "f via Poincare-Hopf " << f_function_ph(torus, 7) << "\n";
    std::cout << "f via Gauss-Bonnet  " << f_function_gb(torus) << "\n";

    const VertexFunction g = random_vertex_function(torus, 7);
    const IndexReport indices = index_report(torus, g);
    std::cout << "\nvertex  rank  index polynomial  index\n";
    for (const auto& [v, p] : indices.polys) {
        std::cout << v << "\t" << g.rank(v) << "\t" << p << "\t" << indices.values.at(v) << "\n";
    }
    std::cout << "1 + t * sum = " << index_sum(indices) << "\n";

    const CurvatureReport curv = curvature_report(torus);
    std::cout << "\nsum of curvatures = " << curv.total << ", chi = " << euler_characteristic(torus) << "\n";
    return 0;
}
