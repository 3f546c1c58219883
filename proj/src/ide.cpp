#include "idg/ide.hpp"

namespace idg {

namespace {

MonoElem root_level(const TowerLevel &tower, const MonoElem &x)
{
    MonoElem r = tower.embed(x);
    for (int i = 0; i < tower.level(); ++i) r = p_root(r);
    return r;
}

Matrix<MonoElem> root_matrix(const TowerLevel &tower, const Matrix<MonoElem> &m)
{
    const int n = m.size();
    Matrix<MonoElem> r(n, MonoElem::zero(tower.bracket()));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) r(i, j) = root_level(tower, m(i, j));
    }
    return r;
}

} // namespace

FrobeniusPullback frobenius_pullback(const IdeMatrix<MonoElem> &A, const Matrix<MonoElem> &Y, const TowerLevel &tower)
{
    const std::int64_t pl = ipow(tower.base()->p(), tower.level());
    FrobeniusPullback r;
    for (std::int64_t k = 0; k <= A.order(); k += pl) r.A.A.push_back(root_matrix(tower, A.A[k]));
    r.Y = root_matrix(tower, Y);
    return r;
}

} // namespace idg
