#ifndef HEPTAGON_H
#define HEPTAGON_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HeptStatus {
  HEPT_STATUS_OK = 0,
  HEPT_STATUS_NULL_POINTER = 1,
  HEPT_STATUS_INVALID_ARGUMENT = 2,
  HEPT_STATUS_PARSE = 3,
  HEPT_STATUS_OUT_OF_RANGE = 4,
  HEPT_STATUS_ARITHMETIC = 5,
  HEPT_STATUS_IO = 6,
  HEPT_STATUS_PANIC = 7,
} HeptStatus;

typedef struct HeptReport HeptReport;

typedef struct HeptSpectrum HeptSpectrum;

/**
 * One spectrum record; `nu` is 0 for levels without a qubit sign.
 */
typedef struct HeptLevel {
  int32_t k;
  uint8_t r_prime;
  int8_t nu;
  uint8_t r_min;
  uint8_t r_max;
  uint32_t multiplicity;
  double energy;
} HeptLevel;

typedef struct HeptCheck {
  uint8_t section;
  bool passed;
} HeptCheck;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last non-`OK` status on this thread, or null if none.
 * The caller owns the result.
 */
char *hept_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void hept_string_free(char *s);

/**
 * Builds the 35-record spectrum.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum HeptStatus hept_spectrum_new(struct HeptSpectrum **out);

/**
 * # Safety
 * `s` must come from [`hept_spectrum_new`]; `out` must be valid for writes.
 */
enum HeptStatus hept_spectrum_len(const struct HeptSpectrum *s, size_t *out);

/**
 * Sum of multiplicities: 128.
 *
 * # Safety
 * As for [`hept_spectrum_len`].
 */
enum HeptStatus hept_spectrum_total(const struct HeptSpectrum *s, size_t *out);

/**
 * # Safety
 * As for [`hept_spectrum_len`].
 */
enum HeptStatus hept_spectrum_level(const struct HeptSpectrum *s,
                                    size_t index,
                                    struct HeptLevel *out);

/**
 * Exact energy of one record, e.g. `(-7/2 - 1·ρ - 1/2·ρ²) + (1/2)·√Δ2^1`.
 *
 * # Safety
 * As for [`hept_spectrum_len`]; release the string with [`hept_string_free`].
 */
enum HeptStatus hept_spectrum_energy_string(const struct HeptSpectrum *s, size_t index, char **out);

/**
 * # Safety
 * As for [`hept_spectrum_energy_string`].
 */
enum HeptStatus hept_spectrum_to_json(const struct HeptSpectrum *s, char **out);

/**
 * # Safety
 * `s` must be null or come from [`hept_spectrum_new`], not yet freed.
 */
void hept_spectrum_free(struct HeptSpectrum *s);

/**
 * Runs one section (2..=7) of the check suite, or all of them for `section = 0`.
 * A failing check is not an error: inspect the report.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum HeptStatus hept_verify_run(uint8_t section, struct HeptReport **out);

/**
 * # Safety
 * `r` must come from [`hept_verify_run`]; `out` must be valid for writes.
 */
enum HeptStatus hept_report_len(const struct HeptReport *r, size_t *out);

/**
 * # Safety
 * As for [`hept_report_len`].
 */
enum HeptStatus hept_report_passed(const struct HeptReport *r, bool *out);

/**
 * # Safety
 * As for [`hept_report_len`].
 */
enum HeptStatus hept_report_check(const struct HeptReport *r, size_t index, struct HeptCheck *out);

/**
 * # Safety
 * As for [`hept_report_len`]; release the string with [`hept_string_free`].
 */
enum HeptStatus hept_report_to_json(const struct HeptReport *r, char **out);

/**
 * # Safety
 * `r` must be null or come from [`hept_verify_run`], not yet freed.
 */
void hept_report_free(struct HeptReport *r);

/**
 * Permutation of spectrum records induced by a group element given as
 * `{"eps": [[±1,±1,±1],[±1,±1,±1]], "l": 1..6}`: `perm[i] = j` when record `i`
 * is sent to record `j`. `perm` must hold at least `capacity` entries;
 * `written` receives the record count.
 *
 * # Safety
 * `element` must be a NUL-terminated string; `perm` valid for `capacity` writes.
 */
enum HeptStatus hept_galois_apply(const char *element,
                                  size_t *perm,
                                  size_t capacity,
                                  size_t *written);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HEPTAGON_H */
