// Transcription of the two minimal-degeneration Hasse diagrams (the
// two-/three-vertex figure and the four-vertex figure).  This block of text
// is the reviewed data source for the move table: one entry per line,
//
//     <abstract vertices> : <pre arrows> -> <post arrows>
//
// with vertices named a < b < c < d, arrows written source>target, several
// arrows comma-separated, and "." for the empty fragment.  Instantiating an
// entry means choosing concrete vertices in the same relative order that
// carry exactly the pre arrows and nothing else, and swapping in the post
// arrows; all spectator arrows stay put.  A property test checks that every
// line is a covering relation of the degeneration order on the abstract
// spectator-free patterns and that the table is complete (it equals the
// transitive reduction there).

namespace bnil {

extern const char* const kMoveTableText;

const char* const kMoveTableText = R"(
# two vertices: reverse the arrow, then delete it
ab : a>b -> b>a
ab : b>a -> .

# three vertices: top element a>c, bottom element c>a
abc : a>c -> a>b
abc : a>c -> b>c
abc : a>b -> b>a
abc : a>b -> c>b
abc : b>c -> b>a
abc : b>c -> c>b
abc : b>a -> c>a
abc : c>b -> c>a

# four vertices: top element {a>d, b>c}, bottom element {c>a, d>b}
abcd : a>d,b>c -> a>c,b>d
abcd : a>d,b>c -> a>d,c>b
abcd : a>c,b>d -> b>d,c>a
abcd : a>c,b>d -> a>b,c>d
abcd : a>c,b>d -> a>c,d>b
abcd : a>d,c>b -> b>d,c>a
abcd : a>d,c>b -> a>b,c>d
abcd : a>d,c>b -> a>c,d>b
abcd : b>d,c>a -> b>a,c>d
abcd : b>d,c>a -> b>c,d>a
abcd : a>b,c>d -> b>a,c>d
abcd : a>b,c>d -> a>b,d>c
abcd : a>c,d>b -> b>c,d>a
abcd : a>c,d>b -> a>b,d>c
abcd : b>a,c>d -> c>b,d>a
abcd : b>a,c>d -> b>a,d>c
abcd : b>c,d>a -> c>b,d>a
abcd : b>c,d>a -> b>a,d>c
abcd : a>b,d>c -> c>b,d>a
abcd : a>b,d>c -> b>a,d>c
abcd : c>b,d>a -> c>a,d>b
abcd : b>a,d>c -> c>a,d>b
)";

}  // namespace bnil
