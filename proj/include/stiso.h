/* C interface of the stiso decision engine.
 *
 * All work goes through an opaque engine handle. Requests and responses are
 * JSON documents; integers inside them are decimal strings of arbitrary
 * size. Return codes mirror the CLI exit codes:
 *
 *   STISO_OK             a verdict or invariant set was produced
 *   STISO_ERR_USAGE      malformed request or descriptor
 *   STISO_ERR_UNDECIDED  a hypothesis fails or a resource cap was hit;
 *                        distinct from a negative verdict
 *   STISO_ERR_INTERNAL   unexpected failure
 *
 * Nonzero codes still produce a response document (with an "error" object)
 * whenever one can be formed, so batch drivers can keep streaming.
 */

#ifndef STISO_H
#define STISO_H

#ifdef __cplusplus
extern "C" {
#endif

#define STISO_OK 0
#define STISO_ERR_USAGE 2
#define STISO_ERR_UNDECIDED 3
#define STISO_ERR_INTERNAL 4

typedef struct stiso_engine stiso_engine;

/* Version string of the library, e.g. "0.1.0". Static storage. */
const char* stiso_version(void);

/* Creates an engine with default options (enumeration cap 1000000, no
 * trace). Returns NULL only on allocation failure. */
stiso_engine* stiso_engine_new(void);

void stiso_engine_free(stiso_engine* engine);

/* Sets the residue enumeration cap from a positive decimal string. */
int stiso_engine_set_enumeration_cap(stiso_engine* engine, const char* decimal_cap);

/* Enables or disables the "trace" array in responses. */
void stiso_engine_set_trace(stiso_engine* engine, int enabled);

/* Runs one request document. On return *response points to a heap-allocated
 * JSON string (release with stiso_string_free), or is NULL when no document
 * could be formed. */
int stiso_run(stiso_engine* engine, const char* request_json, char** response);

/* Message of the most recent failure on this engine; empty string if the
 * last call succeeded. Valid until the next call on the same engine. */
const char* stiso_last_error(const stiso_engine* engine);

void stiso_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* STISO_H */
