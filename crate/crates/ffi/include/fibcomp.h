#ifndef FIBCOMP_H
#define FIBCOMP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Bit flags for [`fibcomp_render`].
 */
#define FIBCOMP_RENDER_SVG 1

#define FIBCOMP_RENDER_EVEN_GRAY 2

#define FIBCOMP_RENDER_CUTJOIN 4

#define FIBCOMP_RENDER_LENGTHS 8

typedef enum FibcompClass {
  FIBCOMP_CLASS_ALL = 0,
  FIBCOMP_CLASS_PARTS12 = 1,
  FIBCOMP_CLASS_ODD = 2,
  FIBCOMP_CLASS_MIN2 = 3,
} FibcompClass;

typedef enum FibcompIdentity {
  FIBCOMP_IDENTITY_EQ1 = 0,
  FIBCOMP_IDENTITY_EQ2 = 1,
  FIBCOMP_IDENTITY_EQ3 = 2,
  FIBCOMP_IDENTITY_EQ4 = 3,
  FIBCOMP_IDENTITY_POW2 = 4,
} FibcompIdentity;

typedef enum FibcompMap {
  FIBCOMP_MAP_PROP1 = 0,
  FIBCOMP_MAP_PROP2 = 1,
  FIBCOMP_MAP_PROP3 = 2,
  FIBCOMP_MAP_THM4 = 3,
} FibcompMap;

typedef enum FibcompOrigin {
  FIBCOMP_ORIGIN_FROM_N_MINUS1 = 0,
  FIBCOMP_ORIGIN_FROM_N_MINUS2 = 1,
  FIBCOMP_ORIGIN_FROM_MIN2 = 2,
  FIBCOMP_ORIGIN_FROM_ODD = 3,
} FibcompOrigin;

typedef enum FibcompStatus {
  FIBCOMP_STATUS_OK = 0,
  FIBCOMP_STATUS_NULL_POINTER = 1,
  FIBCOMP_STATUS_PARSE_ERROR = 2,
  FIBCOMP_STATUS_DOMAIN_ERROR = 3,
  FIBCOMP_STATUS_VERIFICATION_FAILED = 4,
  FIBCOMP_STATUS_END_OF_STREAM = 5,
  FIBCOMP_STATUS_INVALID_ARGUMENT = 6,
} FibcompStatus;

/*
 Opaque composition handle.
 */
typedef struct FibcompComposition FibcompComposition;

/*
 Opaque lazy enumeration stream.
 */
typedef struct FibcompStream FibcompStream;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Library version; static storage, do not free.
 */
const char *fibcomp_version(void);

/*
 Message for the most recent failure on this thread, or NULL. Valid until
 the next fibcomp call on the same thread; do not free.
 */
const char *fibcomp_last_error(void);

/*
 Frees a string returned through an `out` parameter. NULL is ignored.
 */
void fibcomp_string_free(char *s);

/*
 Parses the text form (`3,1,1`, or `-` for the empty composition).
 */
enum FibcompStatus fibcomp_composition_parse(const char *text, struct FibcompComposition **out);

/*
 Builds a composition from `len` parts; `parts` may be NULL when `len` is 0.
 */
enum FibcompStatus fibcomp_composition_from_parts(const uint32_t *parts,
                                                  size_t len,
                                                  struct FibcompComposition **out);

void fibcomp_composition_free(struct FibcompComposition *c);

/*
 Number of parts; 0 for NULL.
 */
size_t fibcomp_composition_len(const struct FibcompComposition *c);

/*
 Sum of the parts; 0 for NULL.
 */
uint32_t fibcomp_composition_total(const struct FibcompComposition *c);

/*
 Borrowed pointer to the parts array, valid while the handle lives.
 */
const uint32_t *fibcomp_composition_parts(const struct FibcompComposition *c);

/*
 Class membership bit set: bit `k` set for class value `k` of [`FibcompClass`].
 */
uint8_t fibcomp_composition_classify(const struct FibcompComposition *c);

enum FibcompStatus fibcomp_composition_to_string(const struct FibcompComposition *c, char **out);

/*
 Cut/join word (`JJCC`) of a nonempty composition.
 */
enum FibcompStatus fibcomp_encode(const struct FibcompComposition *c, char **out);

/*
 Decodes a cut/join word. `board` 0 infers the board length from the word.
 */
enum FibcompStatus fibcomp_decode(const char *word,
                                  uint32_t board,
                                  struct FibcompComposition **out);

enum FibcompStatus fibcomp_conjugate(const struct FibcompComposition *c,
                                     struct FibcompComposition **out);

enum FibcompStatus fibcomp_reverse(const struct FibcompComposition *c,
                                   struct FibcompComposition **out);

/*
 `F_m` as a decimal string.
 */
enum FibcompStatus fibcomp_fib(uint32_t m, char **out);

/*
 Number of class compositions of `n`, as a decimal string.
 */
enum FibcompStatus fibcomp_count(enum FibcompClass class_, uint32_t n, char **out);

/*
 0-based canonical rank, as a decimal string.
 */
enum FibcompStatus fibcomp_rank(enum FibcompClass class_,
                                const struct FibcompComposition *c,
                                char **out);

/*
 Composition at a decimal rank.
 */
enum FibcompStatus fibcomp_unrank(enum FibcompClass class_,
                                  uint32_t n,
                                  const char *rank,
                                  struct FibcompComposition **out);

/*
 Canonical-order stream over the class compositions of `n`.
 */
enum FibcompStatus fibcomp_stream_new(enum FibcompClass class_,
                                      uint32_t n,
                                      struct FibcompStream **out);

/*
 Stream positioned at a decimal rank, for sharded enumeration.
 */
enum FibcompStatus fibcomp_stream_from_rank(enum FibcompClass class_,
                                            uint32_t n,
                                            const char *rank,
                                            struct FibcompStream **out);

/*
 Writes the next composition to `out`, or returns `EndOfStream`.
 */
enum FibcompStatus fibcomp_stream_next(struct FibcompStream *stream,
                                       struct FibcompComposition **out);

void fibcomp_stream_free(struct FibcompStream *stream);

/*
 Applies a bijection to a tagged source composition.
 */
enum FibcompStatus fibcomp_map_forward(enum FibcompMap map,
                                       enum FibcompOrigin origin,
                                       const struct FibcompComposition *payload,
                                       uint32_t n,
                                       struct FibcompComposition **out);

/*
 Inverts a bijection, reporting the origin tag and the source composition.
 */
enum FibcompStatus fibcomp_map_backward(enum FibcompMap map,
                                        const struct FibcompComposition *c,
                                        uint32_t n,
                                        enum FibcompOrigin *out_origin,
                                        struct FibcompComposition **out);

/*
 Exhaustive bijection check at size `n`. `bound` 0 uses the default
 materialization bound. Returns `VerificationFailed` with the first
 counterexample in the error message.
 */
enum FibcompStatus fibcomp_verify(enum FibcompMap map, uint32_t n, uint32_t bound);

/*
 Checks an identity for every `n` up to `n_max` with the default
 cross-check limits.
 */
enum FibcompStatus fibcomp_identity_check(enum FibcompIdentity id, uint32_t n_max);

/*
 Renders a tiling. `flags` combines the `FIBCOMP_RENDER_*` bits; ASCII
 is the default format and `LENGTHS` wins over `CUTJOIN`.
 */
enum FibcompStatus fibcomp_render(const struct FibcompComposition *c, uint32_t flags, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FIBCOMP_H */
