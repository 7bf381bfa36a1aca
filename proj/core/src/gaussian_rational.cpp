#include "qinv/gaussian_rational.hpp"

#include "qinv/errors.hpp"

namespace qinv {

GaussianRational GaussianRational::rational(long num, long den) {
  if (den == 0) throw ArgumentError("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return GaussianRational(std::move(q));
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw ArgumentError("division by zero in Q(i)");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  const mpq_class n = o.norm();
  GaussianRational num = *this * o.conj();
  re_ = num.re_ / n;
  im_ = num.im_ / n;
  return *this;
}

void GaussianRational::add_product(const GaussianRational& a, const GaussianRational& b) {
  thread_local mpq_class tmp;
  const bool a_real = sgn(a.im_) == 0;
  const bool b_real = sgn(b.im_) == 0;
  mpq_mul(tmp.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
  re_ += tmp;
  if (a_real && b_real) return;
  if (!a_real && !b_real) {
    mpq_mul(tmp.get_mpq_t(), a.im_.get_mpq_t(), b.im_.get_mpq_t());
    re_ -= tmp;
  }
  if (!b_real) {
    mpq_mul(tmp.get_mpq_t(), a.re_.get_mpq_t(), b.im_.get_mpq_t());
    im_ += tmp;
  }
  if (!a_real) {
    mpq_mul(tmp.get_mpq_t(), a.im_.get_mpq_t(), b.re_.get_mpq_t());
    im_ += tmp;
  }
}

std::string GaussianRational::to_string() const {
  const bool has_re = sgn(re_) != 0;
  const bool has_im = sgn(im_) != 0;
  if (!has_im) return re_.get_str();
  std::string im_part;
  if (im_ == 1) {
    im_part = "i";
  } else if (im_ == -1) {
    im_part = "-i";
  } else {
    im_part = im_.get_str() + "i";
  }
  if (!has_re) return im_part;
  std::string s = "(" + re_.get_str();
  if (sgn(im_) > 0) s += "+";
  return s + im_part + ")";
}

}  // namespace qinv
