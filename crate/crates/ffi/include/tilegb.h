#ifndef TILEGB_H
#define TILEGB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every exported function.
typedef enum TgStatus {
  TG_STATUS_OK = 0,
  TG_STATUS_NULL_POINTER = 1,
  TG_STATUS_INVALID_UTF8 = 2,
  TG_STATUS_PARSE = 3,
  TG_STATUS_INVALID_ARGUMENT = 4,
  TG_STATUS_ARITY_MISMATCH = 5,
  TG_STATUS_UNVERIFIED = 6,
  TG_STATUS_INTERNAL = 7,
  TG_STATUS_PANIC = 8,
} TgStatus;

// Coefficient representative used by reduction.
typedef enum TgConvention {
  // Remainders in `[0, |d|)`.
  TG_CONVENTION_NON_NEG = 0,
  // Remainders of least absolute value, ties towards the positive one.
  TG_CONVENTION_MIN_ABS = 1,
} TgConvention;

// Opaque strong Groebner basis.
typedef struct TgBasis TgBasis;

// Opaque polynomial in `x, y` with integer coefficients.
typedef struct TgPolynomial TgPolynomial;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread. Valid until the next
// failing call; never null.
const char *tg_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void tg_string_free(char *s);

// Parses text such as `"1 + x + 2*x*y^3"`.
//
// # Safety
// `text` must be a valid NUL-terminated string and `out` writable.
enum TgStatus tg_poly_parse(const char *text, struct TgPolynomial **out);

// Newton polynomial of the triangle with side `m`.
//
// # Safety
// `out` must be writable.
enum TgStatus tg_triangle(uint32_t m, struct TgPolynomial **out);

// Writes a newly allocated string; release it with `tg_string_free`.
//
// # Safety
// `p` must be a live handle and `out` writable.
enum TgStatus tg_poly_format(const struct TgPolynomial *p, char **out);

// # Safety
// `p` must be null or a handle from this library not yet freed.
void tg_poly_free(struct TgPolynomial *p);

// The explicit, verified four-element basis for n-bones.
//
// # Safety
// `out` must be writable.
enum TgStatus tg_nbone_basis(uint32_t n, enum TgConvention conv, struct TgBasis **out);

// Basis in its text form; release with `tg_string_free`.
//
// # Safety
// `b` must be a live handle and `out` writable.
enum TgStatus tg_basis_to_text(const struct TgBasis *b, char **out);

// # Safety
// `b` must be null or a handle from this library not yet freed.
void tg_basis_free(struct TgBasis *b);

// Runs the strong-basis check.
//
// # Safety
// `b` must be a live handle and `pass` writable.
enum TgStatus tg_basis_verify(struct TgBasis *b, bool *pass);

// Remainder of `p` on strong reduction by `b`.
//
// # Safety
// `p`, `b` must be live handles and `out` writable.
enum TgStatus tg_reduce(const struct TgPolynomial *p,
                        const struct TgBasis *b,
                        struct TgPolynomial **out);

// Ideal membership; the basis must be verified.
//
// # Safety
// `p`, `b` must be live handles and `member` writable.
enum TgStatus tg_ideal_member(const struct TgPolynomial *p, const struct TgBasis *b, bool *member);

// Whether the side-`m` triangle has a signed tiling by n-bones.
//
// # Safety
// `yes` must be writable.
enum TgStatus tg_decide_nbone(uint64_t m, uint32_t n, bool *yes);

// Builds and checks a signed tiling of the side-`m` triangle by n-bones and
// reports its number of placements.
//
// # Safety
// `placements` must be writable.
enum TgStatus tg_certificate_nbone(uint32_t m, uint32_t n, size_t *placements);

// Tile homology group of n-bones as text such as `"Z^2 + Z/3"`; release
// with `tg_string_free`.
//
// # Safety
// `out` must be writable.
enum TgStatus tg_nbone_homology(uint32_t n, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TILEGB_H */
