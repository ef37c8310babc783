#include "hikita/matrix.hpp"

namespace hikita {

std::vector<Rational> characteristic_polynomial(const QMatrix& m) {
  if (!m.is_square()) throw InvalidInput("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMatrix mk(n, n);
  const QMatrix id = QMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + c[n - k + 1] * id;
    c[n - k] = -trace(m * mk) / Rational(static_cast<long>(k));
  }
  return c;
}

std::vector<std::vector<std::string>> to_strings(const QMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j).to_string());
  return out;
}

QMatrix qmatrix_from_strings(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Rational>> parsed(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const std::string& s : rows[i]) parsed[i].push_back(Rational::parse(s));
  return QMatrix::from_rows(parsed);
}

}  // namespace hikita
