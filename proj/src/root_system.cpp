#include "kstab/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace kstab {

namespace {

bool valid_rank(char letter, int rank) {
    switch (letter) {
        case 'A': return rank >= 1;
        case 'B':
        case 'C': return rank >= 2;
        case 'D': return rank >= 4;
        case 'E': return rank >= 6 && rank <= 8;
        case 'F': return rank == 4;
        case 'G': return rank == 2;
        default: return false;
    }
}

template <typename Vec>
std::string tuple_string(const Vec& v) {
    std::ostringstream os;
    os << '(';
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i > 0) os << ',';
        os << v(i);
    }
    os << ')';
    return os.str();
}

}  // namespace

DynkinDiagram::DynkinDiagram(std::vector<DynkinComponent> components) : components_(std::move(components)) {
    if (components_.empty()) throw InputError("Dynkin diagram has no components");
    for (auto& c : components_) {
        c.letter = static_cast<char>(std::toupper(static_cast<unsigned char>(c.letter)));
        if (!valid_rank(c.letter, c.rank)) {
            throw InputError("invalid Dynkin type " + std::string(1, c.letter) + std::to_string(c.rank));
        }
    }
}

DynkinDiagram DynkinDiagram::parse(std::string_view text) {
    std::vector<DynkinComponent> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto next = text.find_first_of("xX", pos);
        const std::string_view token = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
        if (token.size() < 2 || !std::isalpha(static_cast<unsigned char>(token[0])) ||
            !std::all_of(token.begin() + 1, token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
            token.size() > 4) {
            throw InputError("cannot parse Dynkin diagram '" + std::string(text) + "'");
        }
        parts.push_back({token[0], std::stoi(std::string(token.substr(1)))});
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return DynkinDiagram(std::move(parts));
}

int DynkinDiagram::rank() const {
    int r = 0;
    for (const auto& c : components_) r += c.rank;
    return r;
}

int DynkinDiagram::offset(std::size_t c) const {
    int r = 0;
    for (std::size_t i = 0; i < c; ++i) r += components_[i].rank;
    return r;
}

std::size_t DynkinDiagram::component_of(int node) const {
    int start = 1;
    for (std::size_t c = 0; c < components_.size(); ++c) {
        if (node >= start && node < start + components_[c].rank) return c;
        start += components_[c].rank;
    }
    throw InputError("node " + std::to_string(node) + " out of range for " + to_string());
}

std::string DynkinDiagram::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i > 0) out += 'x';
        out += components_[i].letter + std::to_string(components_[i].rank);
    }
    return out;
}

std::string Root::to_string() const { return tuple_string(coeffs); }

Weight Weight::fundamental(int rank, int node) {
    if (node < 1 || node > rank) throw InputError("fundamental weight index out of range");
    Weight w = zero(rank);
    w.coeffs(node - 1) = 1;
    return w;
}

bool Weight::is_dominant() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const BigRational& c) { return c.sign() >= 0; });
}

std::string Weight::to_string() const { return tuple_string(coeffs); }

Eigen::MatrixXi simple_gram_matrix(const DynkinComponent& component) {
    const int n = component.rank;
    Eigen::MatrixXi g = Eigen::MatrixXi::Zero(n, n);
    auto link = [&](int i, int j, int value) {  // 1-based
        g(i - 1, j - 1) = value;
        g(j - 1, i - 1) = value;
    };
    // Entries are twice the usual (alpha_i, alpha_j) so B and F stay integral.
    switch (component.letter) {
        case 'A':
            for (int i = 1; i <= n; ++i) g(i - 1, i - 1) = 4;
            for (int i = 1; i < n; ++i) link(i, i + 1, -2);
            break;
        case 'B':
            for (int i = 1; i < n; ++i) g(i - 1, i - 1) = 4;
            g(n - 1, n - 1) = 2;
            for (int i = 1; i < n; ++i) link(i, i + 1, -2);
            break;
        case 'C':
            for (int i = 1; i < n; ++i) g(i - 1, i - 1) = 4;
            g(n - 1, n - 1) = 8;
            for (int i = 1; i < n - 1; ++i) link(i, i + 1, -2);
            link(n - 1, n, -4);
            break;
        case 'D':
            for (int i = 1; i <= n; ++i) g(i - 1, i - 1) = 4;
            for (int i = 1; i < n - 1; ++i) link(i, i + 1, -2);
            link(n - 2, n, -2);
            break;
        case 'E':
            for (int i = 1; i <= n; ++i) g(i - 1, i - 1) = 4;
            link(1, 3, -2);
            link(2, 4, -2);
            for (int i = 3; i < n; ++i) link(i, i + 1, -2);
            break;
        case 'F':
            g.diagonal() << 4, 4, 2, 2;
            link(1, 2, -2);
            link(2, 3, -2);
            link(3, 4, -1);
            break;
        case 'G':
            g.diagonal() << 4, 12;
            link(1, 2, -6);
            break;
        default:
            throw InputError("unknown Dynkin letter");
    }
    return g;
}

std::vector<Root> enumerate_positive_roots(const Eigen::MatrixXi& cartan) {
    const int n = static_cast<int>(cartan.rows());
    std::set<std::vector<int>> seen;
    auto key = [](const Eigen::VectorXi& v) { return std::vector<int>(v.data(), v.data() + v.size()); };

    std::vector<Eigen::VectorXi> layer;
    for (int i = 0; i < n; ++i) {
        layer.push_back(Eigen::VectorXi::Unit(n, i));
        seen.insert(key(layer.back()));
    }
    std::vector<Root> roots;
    const int max_layers = n * 64;
    for (int height = 1; !layer.empty(); ++height) {
        if (height > max_layers) throw std::logic_error("positive root enumeration did not terminate");
        std::sort(layer.begin(), layer.end(), [&](const auto& a, const auto& b) { return key(a) > key(b); });
        for (const auto& beta : layer) roots.push_back({beta});

        std::vector<Eigen::VectorXi> next;
        for (const auto& beta : layer) {
            for (int i = 0; i < n; ++i) {
                // <beta, alpha_i^vee> = sum_j beta_j c_ji
                const int coroot_pairing = beta.dot(cartan.col(i));
                int q = 0;
                Eigen::VectorXi down = beta;
                while (true) {
                    down(i) -= 1;
                    if (down(i) < 0 || !seen.contains(key(down))) break;
                    ++q;
                }
                if (q - coroot_pairing < 1) continue;
                Eigen::VectorXi up = beta;
                up(i) += 1;
                if (seen.insert(key(up)).second) next.push_back(up);
            }
        }
        layer = std::move(next);
    }
    return roots;
}

RootSystem RootSystem::build(const DynkinDiagram& diagram, std::span<const BigRational> scales) {
    const auto& comps = diagram.components();
    if (!scales.empty() && scales.size() != comps.size()) {
        throw InputError("expected one symmetrizer scale per component (" + std::to_string(comps.size()) + ")");
    }
    RootSystem rs;
    rs.diagram_ = diagram;
    const int n = diagram.rank();
    rs.cartan_ = Eigen::MatrixXi::Zero(n, n);
    rs.symmetrizers_ = RationalVector::Zero(n);
    for (std::size_t c = 0; c < comps.size(); ++c) {
        const BigRational scale = scales.empty() ? BigRational(1) : scales[c];
        if (scale.sign() <= 0) throw InputError("symmetrizer scales must be positive");
        const Eigen::MatrixXi gram = simple_gram_matrix(comps[c]);
        const int k = comps[c].rank;
        const int off = diagram.offset(c);
        const int min_norm = gram.diagonal().minCoeff();
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) {
                rs.cartan_(off + i, off + j) = 2 * gram(i, j) / gram(j, j);
            }
            rs.symmetrizers_(off + i) = BigRational(gram(i, i), min_norm) * scale;
        }
    }
    rs.positive_roots_ = enumerate_positive_roots(rs.cartan_);
    rs.fundamental_weights_ = exact_inverse<BigRational>(to_rational(rs.cartan_));
    return rs;
}

RationalVector RootSystem::to_simple_basis(const Weight& w) const {
    if (w.coeffs.size() != rank()) throw InputError("weight has wrong dimension");
    return fundamental_weights_.transpose() * w.coeffs;
}

Weight rho(const RootSystem& rs) { return {RationalVector::Constant(rs.rank(), BigRational(1))}; }

BigRational pairing(const RootSystem& rs, const Weight& w, const Root& g) {
    if (w.coeffs.size() != rs.rank() || g.coeffs.size() != rs.rank()) {
        throw InputError("pairing: dimension mismatch");
    }
    BigRational total;
    for (int i = 0; i < rs.rank(); ++i) {
        if (g.coeffs(i) == 0) continue;
        total += w.coeffs(i) * rs.symmetrizers()(i) * BigRational(g.coeffs(i));
    }
    return total;
}

int dim_adjoint(const RootSystem& rs) { return 2 * static_cast<int>(rs.positive_roots().size()) + rs.rank(); }

int classical_positive_root_count(const DynkinComponent& c) {
    const int n = c.rank;
    switch (c.letter) {
        case 'A': return n * (n + 1) / 2;
        case 'B':
        case 'C': return n * n;
        case 'D': return n * (n - 1);
        case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
        case 'F': return 24;
        case 'G': return 6;
        default: throw InputError("unknown Dynkin letter");
    }
}

}  // namespace kstab
