#pragma once

#include <array>
#include <string>
#include <vector>

#include "stackcoh/abelian.hpp"

namespace zlin {

// Homomorphism between canonical-form groups, as a matrix on canonical
// generators (codomain gens x domain gens). Well-definedness — the matrix
// maps domain relations into codomain relations — is checked on construction.
class AbelianHom {
  public:
    AbelianHom() = default;
    AbelianHom(AbelianGroup domain, AbelianGroup codomain, Mat matrix);

    static AbelianHom zero(const AbelianGroup& dom, const AbelianGroup& cod);
    static AbelianHom identity(const AbelianGroup& g);
    static AbelianHom multiplication_by(const Int& n, const AbelianGroup& g);

    const AbelianGroup& domain() const { return domain_; }
    const AbelianGroup& codomain() const { return codomain_; }
    const Mat& matrix() const { return matrix_; }

    bool is_zero() const { return matrix_.is_zero(); }
    bool equal_to(const AbelianHom& o) const;

    AbelianHom direct_sum(const AbelianHom& o) const;

  private:
    AbelianGroup domain_, codomain_;
    Mat matrix_;
};

// h o g (g applied first).
AbelianHom compose(const AbelianHom& h, const AbelianHom& g);

struct HomAnalysis {
    AbelianGroup kernel, image, cokernel;
    // Ambient data for follow-up constructions:
    Mat kernel_lattice;                 // columns in domain generator coords
    CanonicalizedQuotient kernel_quot;  // kernel lattice coords -> canonical kernel
    CanonicalizedQuotient coker_quot;   // codomain generator coords -> canonical cokernel
};

HomAnalysis hom_analyze(const AbelianHom& f);

// Kernel-cokernel exact sequence of a composition h o g:
// 0 -> ker g -> ker(hg) -> ker h -> coker g -> coker(hg) -> coker h -> 0.
struct SixTermSequence {
    AbelianHom g, h, composite;
    std::array<AbelianGroup, 6> groups;
    std::array<AbelianHom, 5> maps;
    bool exact = false;
    std::vector<std::string> audit;  // one line per joint
};

SixTermSequence kernel_cokernel_sequence(const AbelianHom& g, const AbelianHom& h);

// incoming then outgoing share a joint; true iff image(incoming) equals
// kernel(outgoing) exactly.
bool exact_at(const AbelianHom& incoming, const AbelianHom& outgoing);

}  // namespace zlin
