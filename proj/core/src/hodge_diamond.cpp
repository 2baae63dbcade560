#include "fanohodge/hodge_diamond.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "fanohodge/errors.hpp"

namespace fanohodge {

namespace {

std::string where(int p, int q) {
  return "h^{" + std::to_string(p) + "," + std::to_string(q) + "}";
}

}  // namespace

HodgeDiamond::HodgeDiamond(int dimension, std::vector<std::vector<Integer>> rows)
    : dimension_(dimension) {
  if (dimension < 0) throw DomainError("HodgeDiamond: negative dimension");
  const auto size = static_cast<std::size_t>(dimension + 1);
  if (rows.size() != size) throw DomainError("HodgeDiamond: table must have d+1 rows");
  entries_.reserve(size * size);
  for (auto& row : rows) {
    if (row.size() != size) throw DomainError("HodgeDiamond: table must be square");
    for (auto& h : row) entries_.push_back(std::move(h));
  }

  const int d = dimension;
  for (int p = 0; p <= d; ++p) {
    for (int q = 0; q <= d; ++q) {
      const Integer& h = entries_[static_cast<std::size_t>(p * (d + 1) + q)];
      if (h < 0) throw DomainError("HodgeDiamond: negative " + where(p, q));
      if (h != (*this)(q, p)) throw DomainError("HodgeDiamond: Hodge symmetry fails at " + where(p, q));
      if (h != (*this)(d - p, d - q)) {
        throw DomainError("HodgeDiamond: Serre duality fails at " + where(p, q));
      }
    }
  }
}

HodgeDiamond HodgeDiamond::point() { return HodgeDiamond(0, {{Integer(1)}}); }

HodgeDiamond HodgeDiamond::from_function(int dimension,
                                         const std::function<Integer(int, int)>& entry) {
  std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(dimension + 1));
  for (int p = 0; p <= dimension; ++p) {
    rows[static_cast<std::size_t>(p)].reserve(static_cast<std::size_t>(dimension + 1));
    for (int q = 0; q <= dimension; ++q) rows[static_cast<std::size_t>(p)].push_back(entry(p, q));
  }
  return HodgeDiamond(dimension, std::move(rows));
}

Integer HodgeDiamond::operator()(int p, int q) const {
  if (p < 0 || q < 0 || p > dimension_ || q > dimension_) return 0;
  return entries_[static_cast<std::size_t>(p * (dimension_ + 1) + q)];
}

std::vector<std::vector<Integer>> HodgeDiamond::rows() const {
  std::vector<std::vector<Integer>> out(static_cast<std::size_t>(dimension_ + 1));
  for (int p = 0; p <= dimension_; ++p) {
    for (int q = 0; q <= dimension_; ++q) out[static_cast<std::size_t>(p)].push_back((*this)(p, q));
  }
  return out;
}

BiPoly e_polynomial(const HodgeDiamond& dia) {
  BiPoly::Terms terms;
  for (int p = 0; p <= dia.dimension(); ++p) {
    for (int q = 0; q <= dia.dimension(); ++q) {
      Integer h = dia(p, q);
      if ((p + q) % 2 != 0) h = -h;
      terms.emplace(BiExponent{p, q}, std::move(h));
    }
  }
  return BiPoly::from_terms(std::move(terms));
}

LaurentPoly hochschild_polynomial(const HodgeDiamond& dia) {
  LaurentPoly::Terms terms;
  for (int p = 0; p <= dia.dimension(); ++p) {
    for (int q = 0; q <= dia.dimension(); ++q) terms[q - p] += dia(p, q);
  }
  return LaurentPoly::from_terms(std::move(terms));
}

Integer betti(const HodgeDiamond& dia, int m) {
  const int d = dia.dimension();
  if (m < 0 || m > 2 * d) {
    throw RangeError("betti: degree " + std::to_string(m) + " outside [0, " +
                     std::to_string(2 * d) + "]");
  }
  Integer sum = 0;
  for (int p = std::max(0, m - d); p <= std::min(m, d); ++p) sum += dia(p, m - p);
  return sum;
}

LaurentPoly poincare_polynomial(const HodgeDiamond& dia) {
  LaurentPoly::Terms terms;
  for (int m = 0; m <= 2 * dia.dimension(); ++m) terms.emplace(m, betti(dia, m));
  return LaurentPoly::from_terms(std::move(terms));
}

Integer euler(const HodgeDiamond& dia) {
  Integer sum = 0;
  for (int m = 0; m <= 2 * dia.dimension(); ++m) {
    if (m % 2 == 0) {
      sum += betti(dia, m);
    } else {
      sum -= betti(dia, m);
    }
  }
  return sum;
}

HodgeDiamond kunneth_product(const HodgeDiamond& a, const HodgeDiamond& b) {
  const int da = a.dimension();
  const int db = b.dimension();
  return HodgeDiamond::from_function(da + db, [&](int p, int q) {
    Integer sum = 0;
    for (int p1 = std::max(0, p - db); p1 <= std::min(p, da); ++p1) {
      for (int q1 = std::max(0, q - db); q1 <= std::min(q, da); ++q1) {
        sum += a(p1, q1) * b(p - p1, q - q1);
      }
    }
    return sum;
  });
}

bool is_hodge_tate(const HodgeDiamond& dia) {
  for (int p = 0; p <= dia.dimension(); ++p) {
    for (int q = 0; q <= dia.dimension(); ++q) {
      if (p != q && dia(p, q) != 0) return false;
    }
  }
  return true;
}

std::string render_text(const HodgeDiamond& dia) {
  const int d = dia.dimension();
  std::size_t width = 1;
  for (int p = 0; p <= d; ++p) {
    for (int q = 0; q <= d; ++q) width = std::max(width, dia(p, q).get_str().size());
  }

  // Grid of 2d+1 cells per line; h^{p,q} sits in column p - q + d.
  std::ostringstream out;
  for (int m = 0; m <= 2 * d; ++m) {
    std::vector<std::string> cells(static_cast<std::size_t>(2 * d + 1), std::string(width, ' '));
    for (int p = std::max(0, m - d); p <= std::min(m, d); ++p) {
      std::string value = dia(p, m - p).get_str();
      value.insert(0, width - value.size(), ' ');
      cells[static_cast<std::size_t>(2 * p - m + d)] = std::move(value);
    }
    std::string line;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) line += ' ';
      line += cells[c];
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << '\n';
  }
  return out.str();
}

}  // namespace fanohodge
