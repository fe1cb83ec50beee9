// The embedded relation catalog, one record per recurrence (see README
// "Catalog format" for how a record reads). This text is also what
// `rules --export` emits, so a modified catalog can be diffed and re-checked.

namespace recur {

extern const char* kCatalogText;

const char* kCatalogText = R"CATALOG(
section 1 form Q2

rule 1.1 case 1
cof none
guard 4*a*c - b^2
shift +1
k1 (n + 1)*(4*a*c - b^2)
i2 -2*(2*n + 3)*c
alg +1 : b + 2*c*x
rev

section 2 form C3

rule 2A.1 case 2A
cof AB
guard ra*rc - rb^2
shift +1
k1 (n + 1)*(ra*rc - rb^2)
i2 3*((3*n + 4)*U*d - (2*n + 3)*V*c - (3*n + 5)*V*d*x)
alg +1 : -(U*c - 2*V*b + 3*(U*d - V*c)*x - 3*V*d*x^2)
local U = A*rb - B*rc
local V = A*ra - B*rb

rule 2A.2 case 2A
cof AB
guard ra*rc - rb^2
shift -1
k1 3*v*(v + d)
i2 -n*(U*rb + B*v*rc + (U*ra + B*v*rb)*x)
alg 0 : -(U*c + 2*B*v*b + 3*(U*d + B*v*c)*x + 3*B*v*d*x^2)
local U = (3*n + 2)*A*d - (2*n + 1)*B*c
local v = (3*n + 1)*d

rule 2B.1 case 2B
cof none
vanish ra*rc - rb^2
guard ra
shift +1
k1 (n + 1)*(2*n + 1)*(ra*c - 3*rb*d)
i2 3*(3*n + 4)*w*d
alg 0 : -(n + 1)*(rb*c - 2*rc*d + (ra*c - rb*d)*x + ra*d*x^2)
alg +1 : -w*(c + 3*d*x)
local w = (3*n + 2)*d
rev

section 3 form Q4

rule 3A.1 case 3A
cof ABC
guard sa*re - 2*sb*rd + sc*rc1
shift +1
k1 (n + 1)*(sa*re - 2*sb*rd + sc*rc1)
i2 -4*((4*n + 5)*U*e - (3*n + 4)*V*d + u*W*c - (2*u*V*e - (3*n + 5)*W*d)*x + (4*n + 7)*W*e*x^2)
alg +1 : U*d - 2*V*c + 3*W*b + 4*(U*e - V*d + W*c)*x - 4*(V*e - W*d)*x^2 + 4*W*e*x^3
local U = A*sc - B*sd + C*se
local V = A*sb - B*sc + C*sd
local W = A*sa - B*sb + C*sc
local u = 2*n + 3

rule 3A.2 case 3A
cof ABC
guard sa*re - 2*sb*rd + sc*rc1
shift -1
k1 4*(2*n + 1)*(4*n + 3)*w*e^2
i2 -n*((U - V*v)*rc1 + (V*rd + W*re)*w + 2*((U - V*v)*rb + (V*rc2 + W*rd)*w)*x + ((U - V*v)*ra + (V*rb + W*rc1)*w)*x^2)
alg 0 : -((U - V*v)*d + (V*c + 3*W*b)*w + 4*((U + n*V*d)*e + W*w*c)*x + 2*(V*e + 2*W*d)*w*x^2 + 4*W*w*e*x^3)
local U = 2*(2*n + 1)*((4*n + 3)*A*e - (2*n + 1)*C*c)*e
local V = (4*n + 3)*B*e - (3*n + 2)*C*d
local W = (2*n + 1)*C*e
local v = (3*n + 1)*d
local w = 2*(4*n + 1)*e

rule 3B.1 case 3B
cof AB
vanish sa*re - 2*sb*rd + sc*rc1
guard sa
shift +1
k1 u*(u + 1)*(sa*c - 3*sb*d + 6*sc*e)*sa
i2 -2*(2*(4*n + 5)*(U*rb - V)*e - (3*n + 4)*(U*ra - W)*d - 2*(2*n + 3)*(U*ra - W)*e*x)
alg 0 : -(u + 1)*(A*sa - B*sb)*(sb*c - 2*sc*d + 3*sd*e + (sa*c - sb*d + sc*e)*x + (sa*d - sb*e)*x^2 + sa*e*x^3)
alg +1 : (U*rb - V)*d - (U*ra - W)*c + 2*(2*(U*rb - V)*e - (U*ra - W)*d)*x - 2*(U*ra - W)*e*x^2
local U = (3*n + 2)*A*sa*d - (2*n + 1)*(2*A*sb*e + B*sa*c) + B*((3*n + 1)*sb*d - (4*n + 1)*sc*e)
local V = (4*n + 3)*(2*A*rc2 - B*rd)*sa*e
local W = (4*n + 3)*(2*A*rb - B*rc1)*sa*e
local u = 2*n + 1

rule 3B.2 case 3B
cof AB
vanish sa*re - 2*sb*rd + sc*rc1
guard sa
shift -1
k1 8*(2*n + 1)*(4*n + 1)*w*e^2
i2 n*((U*ra + V*rb)*((2*n - 1)*sa*c - (3*n - 2)*sb*d + (4*n - 3)*sc*e) - (U*rc1 + V*rd)*w + ((U*ra + V*rb)*((3*n - 1)*sa*d - 2*(2*n - 1)*sb*e) - 2*(U*rb + V*rc2)*w)*x)
alg -1 : -n*(U*ra + V*rb)*(sb*c - 2*sc*d + 3*sd*e + (sa*c - sb*d + sc*e)*x + (sa*d - sb*e)*x^2 + sa*e*x^3)
alg 0 : -w*(U*d + V*c + 2*(2*U*e + V*d)*x + 2*V*e*x^2)
local U = 2*(2*n + 1)*A*e - (3*n + 1)*B*d
local V = 2*(4*n + 1)*B*e
local w = (4*n - 1)*sa*e

rule 3C.1 case 3C-1
cof none
vanish 6*ra*a - 3*rb*b + rc1*c
vanish rc1 - rc2
guard ra
shift +1
k1 (n + 1)*(3*n + 1)*(3*n + 2)*ra^2
i2 4*(4*n + 5)*w*e
alg 0 : -(n + 1)*(3*(5*n + 3)*ra*b*e - v*c + ((22*n + 13)*ra*c*e - 3*v*d)*x + 3*((7*n + 4)*ra*d - 2*v)*e*x^2 + 6*(2*n + 1)*ra*e^2*x^3)
alg +1 : -w*(d + 4*e*x)
local v = (3*n + 2)*ra*d - (4*n + 3)*rb*e
local w = 6*(2*n + 1)*(4*n + 3)*e^2
rev

rule 3C.2 case 3C-2
cof none
vanish ra*d - 4*rb*e
vanish rb*d - 4*rc2*e
guard ra
shift +1
k1 2*(n + 1)*(2*n + 1)*(rc2 - rc1)
i2 4*w*(w + 2)*e
alg 0 : -(n + 1)*(rd + (rc1 + 2*rc2)*x + 3*rb*x^2 + ra*x^3)
alg +1 : -w*(d + 4*e*x)
local w = 4*n + 3
rev

section 4 form LL

rule 4.1 case 4
cof none
guard a*d - b*c
shift +1 0
k1 (m + 1)*(a*d - b*c)
i2 -d*(m + n + 2)
alg +1 +1 : 1
rev

rule 4.2 case 4
cof none
guard a*d - b*c
shift +1 -1
k1 (m + 1)*b
i2 n*d
alg +1 0 : -1
rev

section 5 form EL

rule 5.1 case 5
cof none
shift +1
k1 (n + 1)*d
i2 b
alg +1 : -1
rev

rule 5.2 case 5
cof none
trig cos sin
shift +1
k1 (n + 1)*d
i2 -b
alg +1 cos : -1
rev

rule 5.3 case 5
cof none
trig sin cos
shift +1
k1 (n + 1)*d
i2 b
alg +1 sin : -1
rev

section 6 form LQ

rule 6A.1 case 6A
cof AB
guard ra*a - rb*b
guard 4*c*e - d^2
shift +1 0
k1 (m + 1)*(ra*a - rb*b)
i2 -((m + 1)*(A*ra - B*rb) - v*V*d - 2*v*V*e*x)
alg +1 +1 : -2*V
local V = A*b - B*a
local v = m + 2*n + 3

rule 6A.2 case 6A
cof AB
guard ra*a - rb*b
guard 4*c*e - d^2
shift -1 0
k1 2*u*e
i2 -(u*U*a + m*B*rb + (u*U*b + m*B*ra)*x)
alg 0 +1 : -2*B
local U = 2*A*e - B*d
local u = m + 2*n + 2

rule 6A.3 case 6A
cof AB
guard ra*a - rb*b
guard 4*c*e - d^2
shift 0 +1
k1 (n + 1)*1/2*(ra*a - rb*b)*(4*c*e - d^2)
i2 U*u - V*((n + 1)*ra + a*e) - V*(u + b)*e*x
alg +1 +1 : -(U - V*e*x)
local U = A*rb*e - (A*d - B*c)*ra
local V = A*ra - B*rb
local u = (m + 2*n + 3)*b

rule 6A.4 case 6A
cof AB
guard ra*a - rb*b
guard 4*c*e - d^2
shift 0 -1
k1 2*v*(v + b)*e
i2 n*(U*rb - V*v*a + (U*ra - V*v*b)*x)
alg +1 0 : -(U + B*v*d + 2*B*v*e*x)
local U = 2*(m + 2*n + 2)*(A*b - B*a)*e + (m + 1)*B*ra
local V = B*(4*c*e - d^2)
local v = (m + 2*n + 1)*b

rule 6A.5 case 6A
cof AB
guard ra*a - rb*b
guard 4*c*e - d^2
shift -1 +1
k1 (n + 1)*(4*c*e - d^2)
i2 -(m*U*b + v*V*a + (v + m)*V*b*x)
alg 0 +1 : U + V*x
local U = A*d - 2*B*c
local V = 2*A*e - B*d
local v = 2*n + 3

rule 6A.6 case 6A
cof AB
guard ra*a - rb*b
guard 4*c*e - d^2
shift +1 -1
k1 (m + 1)*u*b^2
i2 n*(u*U*d + V*rb + (2*u*U*e + V*ra)*x)
alg +1 0 : -(u*U + V*a + V*b*x)
local U = A*b - B*a
local V = (m + 1)*B
local u = m + 2*n + 2

rule 6B.1 case 6B-1
cof none
vanish ra*a - rb*b
guard ra
shift +1 0
k1 (m + n + 1)*ra
i2 -(m + 2*n + 2)*e
alg 0 +1 : b
rev

rule 6B.2 case 6B-1
cof none
vanish ra*a - rb*b
guard ra
shift 0 +1
k1 (m + n + 1)*v*(4*c*e - d^2)
i2 -w*(w + 1)*b*e
alg 0 +1 : m*a*e + v*d + w*b*e*x
local v = (n + 1)*b
local w = m + 2*n + 2
rev

rule 6B.3 case 6B-1
cof none
vanish ra*a - rb*b
guard ra
shift -1 +1
k1 (n + 1)*ra
i2 (m + 2*n + 2)*b^2
alg 0 +1 : -b
rev

rule 6B.4 case 6B-2
cof none
vanish 4*c*e - d^2
guard ra
shift +1 0
k1 (m + 1)*ra
i2 -2*(m + 2*n + 2)*e
alg +1 0 : d + 2*e*x
rev

rule 6B.5 case 6B-2
cof none
vanish 4*c*e - d^2
guard ra
shift 0 +1
k1 (n + 1)*(2*n + 1)*(ra*a - rb*b)
i2 -w*(w + b)
alg +1 0 : -(n + 1)*(rb + ra*x)
alg +1 +1 : w
local w = (m + 2*n + 2)*b
rev

rule 6B.6 case 6B-2
cof none
vanish 4*c*e - d^2
guard ra
shift -1 +1
k1 (n + 1)*(2*n + 1)*ra
i2 -m*(m + 2*n + 2)*b^2
alg 0 0 : -(n + 1)*(rb + ra*x)
alg 0 +1 : m*b
rev

section 7 form EQ

rule 7A.1 case 7A
cof AB
guard 4*c*e - d^2
shift +1
k1 (n + 1)*(4*c*e - d^2)
i2 -(U*b + (2*n + 3)*V + V*b*x)
alg +1 : U + V*x
local U = A*d - 2*B*c
local V = 2*A*e - B*d

rule 7A.2 case 7A
cof AB
guard 4*c*e - d^2
shift -1
k1 b^2
i2 n*(U*d - 2*B*b*c + (2*U*e - B*b*d)*x)
alg 0 : -(U + B*b*x)
local U = A*b - (2*n + 1)*B

rule 7B.1 case 7B
cof none
vanish 4*c*e - d^2
shift +1
k1 2*(n + 1)*(2*n + 1)*e
i2 -b^2
alg 0 : -(n + 1)*(d + 2*e*x)
alg +1 : b
rev

rule 7B.2 case 7B
cof none
trig cos cos
vanish 4*c*e - d^2
shift +1
k1 2*(n + 1)*(2*n + 1)*e
i2 b^2
alg 0 cos : -(n + 1)*(d + 2*e*x)
alg +1 sin : -b
rev

rule 7B.3 case 7B
cof none
trig sin sin
vanish 4*c*e - d^2
shift +1
k1 2*(n + 1)*(2*n + 1)*e
i2 b^2
alg 0 sin : -(n + 1)*(d + 2*e*x)
alg +1 cos : b
rev

section 8 form QQ

rule 8A.1 case 8A
cof ABC
guard ra*rc - rb^2
guard 4*a*c - b^2
guard 4*d*f - e^2
shift +1 0
k1 u*(4*a*c - b^2)
i2 -((2*A*c - B*b + 2*C*a)*u - v*V*e + W*((m + 1)*rb - c*d) - (2*v*V*f - W*((m + 1)*ra - (v + 1)*c*e))*x - (2*v + 1)*W*c*f*x^2)
alg +1 +1 : -(V + W*c*x)
local V = (A*b - B*a)*sa - (A*c - C*a)*sb
local W = A*sa - B*sb + C*sc
local u = (m + 1)*(ra*rc - rb^2)
local v = m + n + 2

rule 8A.2 case 8A
cof ABC
guard ra*rc - rb^2
guard 4*a*c - b^2
guard 4*d*f - e^2
shift -1 0
k1 2*w*(2*w + f)*c
i2 -(U*a + m*V*rc + W*w*d + (U*b + 2*m*V*rb + W*w*e)*x + (U*c + m*V*ra + W*w*f)*x^2)
alg 0 +1 : -(V + C*w*b + 2*C*w*c*x)
local U = (m + n + 1)*((2*m + 2*n + 3)*(2*A*f - B*e + 2*C*d)*f - (2*m + n + 2)*C*(4*d*f - e^2))*c
local V = (2*m + 2*n + 3)*(B*f - C*e)*c - (n + 1)*C*ra
local W = m*C*(4*a*c - b^2)
local w = (m + n + 1)*f

rule 8A.3 case 8A
cof ABC
guard ra*rc - rb^2
guard 4*a*c - b^2
guard 4*d*f - e^2
shift +1 -1
k1 u*c
i2 -(n*V*e + (C*u + w*W)*d + (2*n*V*f + (C*u + (w + n)*W)*e)*x + (C*u + (w + 2*n)*W)*f*x^2)
alg +1 0 : V + W*x
local V = A*b*c - 2*B*a*c + C*a*b
local W = 2*(A*c - C*a)*c - (B*c - C*b)*b
local u = (m + 1)*(4*a*c - b^2)
local w = 2*m + 3

rule 8B.1 case 8B
cof AB
vanish ra*rc - rb^2
guard 2*a*f - b*e + 2*c*d
guard ra
shift +1 0
k1 (m + n + 1)*v*sd*(4*a*c - b^2)
i2 V*(u*c*e - v) + W*(u*b*f + n*ra) + 2*u*(V + W)*c*f*x
alg +1 0 : ra*(n*A*se*c + ((m + 1)*A*b - (2*m + n + 2)*B*a)*sd + V*x)
alg +2 0 : -(V + W)*f
local V = ((2*m + n + 2)*A*c - (m + n + 1)*B*b)*sd + n*B*se*c
local W = (m + 1)*(A*sa - B*sb)*f
local u = m + n + 2
local v = (m + 1)*ra

rule 8B.2 case 8B
cof AB
vanish ra*rc - rb^2
guard 2*a*f - b*e + 2*c*d
guard ra
shift -1 0
k1 w*(w + f)*ra*c
i2 -(U*((m + n)*sd*b - n*se*c) + m*V*sb + ((2*m + n)*U*sd*c + m*V*sa)*x)
alg 0 0 : U*sd - V*rb - V*ra*x
alg +1 0 : -B*w*ra*f
local U = (m + n + 1)*(2*A*f - B*e)*c + m*B*ra
local V = ((m + n + 1)*(2*A*c - B*b)*f - n*B*ra)*f
local w = (2*m + 2*n + 1)*f

rule 8B.3 case 8B
cof AB
vanish ra*rc - rb^2
guard 2*a*f - b*e + 2*c*d
guard ra
shift +1 -1
k1 2*(m + 1)*sa*c
i2 (m + 1)*U*sd - V*e - 2*V*f*x
alg +1 0 : U*ra - B*sa
local U = 2*A*c - B*b
local V = (m + n + 1)*(2*A*c - B*b)*ra - n*B*sa

rule 8C.1 case 8C
cof AB
vanish 4*a*c - b^2
guard 2*a*f - b*e + 2*c*d
guard 4*d*f - e^2
shift +1 0
k1 (m + 1)*u*v^2
i2 (u + 1)*((n + 1)*A*v - 2*(u + n + 1)*(A*rb - B*rc))*f + (u + n + 2)*W*e + 2*(m + n + 2)*W*f*x
alg 0 +1 : -(m + 1)*v*(A*b - 2*B*a + (2*A*c - B*b)*x)
alg +1 +1 : -W
local W = 2*(2*m + n + 2)*(A*ra - B*rb) - (n + 1)*B*(2*a*f - b*e + 2*c*d)
local u = 2*m + 1
local v = 2*a*f - b*e + 2*c*d

rule 8C.2 case 8C
cof AB
vanish 4*a*c - b^2
guard 2*a*f - b*e + 2*c*d
guard 4*d*f - e^2
shift -1 0
k1 2*w*(w + f)
i2 -(U*(u*rb + v) + u*V*rc + (u*U*ra + V*(u*rb - v))*x)
alg -1 +1 : -(U*b + 2*V*a + (2*U*c + V*b)*x)
alg 0 +1 : -2*B*w
local U = (m + n + 1)*(2*A*f - B*e) - m*B*e
local V = 2*m*B*f
local u = 2*(2*m + n)
local v = (n + 1)*(2*a*f - b*e + 2*c*d)
local w = (2*m + 2*n + 1)*f

rule 8C.3 case 8C
cof AB
vanish 4*a*c - b^2
guard 2*a*f - b*e + 2*c*d
guard 4*d*f - e^2
shift 0 +1
k1 (n + 1)*u*v
i2 -(m*(2*A*c - B*b)*u + (2*n + 3)*V*v - w*W*e - 2*w*W*f*x)
alg 0 +1 : v*(A*e - 2*B*d + V*x)
alg 0 +2 : -W
local V = 2*A*f - B*e
local W = 2*(A*e - 2*B*d)*c - (2*A*f - B*e)*b
local u = 4*d*f - e^2
local v = 2*a*f - b*e + 2*c*d
local w = m + n + 2

rule 8C.4 case 8C
cof AB
vanish 4*a*c - b^2
guard 2*a*f - b*e + 2*c*d
guard 4*d*f - e^2
shift 0 -1
k1 2*w*(w + 1)*c*f
i2 n*(U*e - 2*V*d + (2*U*f - V*e)*x)
alg 0 0 : -(U + V*x)
alg 0 +1 : -2*B*w*c
local U = (m + n + 1)*(2*A*f - B*e)*b + B*(2*m*rb - (m + 2*n + 1)*(2*a*f - b*e + 2*c*d))
local V = 2*((m + n + 1)*(2*A*f - B*e)*c + m*B*ra)
local w = 2*m + 2*n + 1

rule 8C.5 case 8C
cof AB
vanish 4*a*c - b^2
guard 2*a*f - b*e + 2*c*d
guard 4*d*f - e^2
shift +1 -1
k1 2*(m + 1)*(2*m + 1)*(2*a*f - b*e + 2*c*d)*c
i2 n*(W*(4*d*f - e^2) + V*e + 2*V*f*x)
alg +1 0 : -(V - W*e - 2*W*f*x)
alg 0 +1 : -W*(b + 2*c*x)
local V = 2*(m + n + 1)*(A*ra - B*rb) + (m - n)*B*(2*a*f - b*e + 2*c*d)
local W = (m + 1)*(2*A*c - B*b)

rule 8C.6 case 8C
cof AB
vanish 4*a*c - b^2
guard 2*a*f - b*e + 2*c*d
guard 4*d*f - e^2
shift -1 +1
k1 2*(n + 1)*u*f
i2 m*B*u*b - V*(v*rb - (m - n - 2)*(2*a*f - b*e + 2*c*d)) + (2*m*B*u*c - v*V*ra)*x
alg 0 +1 : 2*f*(A*e - 2*B*d + V*x)
alg -1 +2 : -V*(b + 2*c*x)
local V = 2*A*f - B*e
local u = 4*d*f - e^2
local v = 2*(m + n + 1)

rule 8D.1 case 8D-1
cof none
vanish ra
vanish rb
guard 2*a*f - b*e + 2*c*d
shift +1 0
k1 u*(4*a*c - b^2)
i2 -2*(2*u + 1)*c
alg +1 0 : b + 2*c*x
local u = m + n + 1
rev

rule 8D.2 case 8D-1
cof none
vanish ra
vanish rb
guard 2*a*f - b*e + 2*c*d
shift +1 -1
k1 c
i2 -f
rev

rule 8D.3 case 8D-2
cof none
vanish 4*a*c - b^2
vanish 2*a*f - b*e + 2*c*d
guard 4*d*f - e^2
shift +1 0
k1 (2*m + n + 1)*v*(4*d*f - e^2)*c
i2 2*w*(2*w + f)
alg 0 +1 : -(v*ra + w*b + 2*w*c*x)
local v = 2*m + n + 2
local w = (m + n + 1)*f
rev

rule 8D.4 case 8D-2
cof none
vanish 4*a*c - b^2
vanish 2*a*f - b*e + 2*c*d
guard 4*d*f - e^2
shift 0 +1
k1 (2*m + n + 1)*(n + 1)*(4*d*f - e^2)*c
i2 -2*w*(2*w + 1)*c*f
alg 0 +1 : m*ra + w*c*e + 2*w*c*f*x
local w = m + n + 1
rev

rule 8D.5 case 8D-2
cof none
vanish 4*a*c - b^2
vanish 2*a*f - b*e + 2*c*d
guard 4*d*f - e^2
shift +1 -1
k1 2*(2*m + n + 1)*c
i2 2*n*f
alg 0 0 : -(b + 2*c*x)
rev

rule 8D.6 case 8D-3
cof none
vanish 4*a*c - b^2
vanish 4*d*f - e^2
guard ra
shift +1 0
k1 2*(2*m + 1)*w*c
i2 -4*v*(2*v + 1)*c*f
alg +1 0 : -2*(n*ra - v*b*f - 2*v*c*f*x)
alg 0 0 : -w*(b + 2*c*x)
local v = m + n + 1
local w = (m + 1)*(2*a*f - b*e + 2*c*d)
rev

rule 8D.7 case 8D-3
cof none
vanish 4*a*c - b^2
vanish 4*d*f - e^2
guard ra
shift +1 -1
k1 2*(m + 1)*(2*m + 1)*c
i2 -2*n*(2*n - 1)*f
alg 0 0 : -(m + 1)*(b + 2*c*x)
alg +1 -1 : n*(e + 2*f*x)
rev
)CATALOG"
R"CATALOG(
section 9 form LLL

rule 9A.1 case 9A
cof AB
guard a*d - b*c
guard a*f - b*e
guard c*f - d*e
shift +1 0 0
k1 (m + 1)*(a*d - b*c)*(a*f - b*e)
i2 (m + 1)*(A*ra - B*rb) + V*((n + 1)*d*e + (p + 1)*c*f) + (m + n + p + 3)*V*d*f*x
alg +1 +1 +1 : -V
local V = A*b - B*a

rule 9A.2 case 9A
cof AB
guard a*d - b*c
guard a*f - b*e
guard c*f - d*e
shift -1 0 0
k1 (m + n + p + 2)*d*f
i2 -(U*a - m*B*rb + (U*b - m*B*ra)*x)
alg 0 +1 +1 : -B
local U = (m + n + p + 2)*A*d*f - B*((n + 1)*d*e + (p + 1)*c*f)

rule 9A.3 case 9A
cof AB
guard a*d - b*c
guard a*f - b*e
guard c*f - d*e
shift +1 -1 0
k1 u*b
i2 -(B*u*c + V*(v*c*f + n*d*e) + (B*u + (v + n)*V*f)*d*x)
alg +1 0 +1 : V
local V = A*b - B*a
local u = (m + 1)*(a*f - b*e)
local v = m + p + 2

rule 9B.1 case 9B
cof none
vanish a*d - b*c
guard a*f - b*e
shift +1 0 0
k1 (m + n + 1)*(a*f - b*e)
i2 -(m + n + p + 2)*f
alg +1 0 +1 : 1
rev

rule 9B.2 case 9B
cof none
vanish a*d - b*c
guard a*f - b*e
shift 0 0 +1
k1 (p + 1)*(a*f - b*e)
i2 (m + n + p + 2)*b
alg +1 0 +1 : -1
rev

rule 9B.3 case 9B
cof none
vanish a*d - b*c
guard a*f - b*e
shift +1 -1 0
k1 b
i2 -d
rev

rule 9B.4 case 9B
cof none
vanish a*d - b*c
guard a*f - b*e
shift +1 0 -1
k1 (m + n + 1)*b
i2 p*f
alg +1 0 0 : -1
rev

section 10 form ELL

rule 10A.1 case 10A
cof AB
guard c*f - d*e
shift +1 0
k1 u*(c*f - d*e)
i2 -((A*f - B*e)*u + V*(b*e + (n + 1)*f) + V*b*f*x)
alg +1 +1 : V
local V = A*d - B*c
local u = (m + 1)*d

rule 10A.2 case 10A
cof AB
guard c*f - d*e
shift -1 0
k1 b*f
i2 -(U*c - m*B*d*e + (U - m*B*f)*d*x)
alg 0 +1 : -B
local U = (A*f - B*e)*b - (n + 1)*B*f

rule 10A.3 case 10A
cof AB
guard c*f - d*e
shift +1 -1
k1 u*d
i2 -(B*u*e - V*(b*e + n*f) + (B*u - V*b)*f*x)
alg +1 0 : -V
local V = A*d - B*c
local u = (m + 1)*d

rule 10B.1 case 10B
cof none
vanish c*f - d*e
shift +1 0
k1 (m + n + 1)*d
i2 b
alg +1 0 : -1
rev

rule 10B.2 case 10B
cof none
trig cos sin
vanish c*f - d*e
shift +1 0
k1 (m + n + 1)*d
i2 -b
alg +1 0 cos : -1
rev

rule 10B.3 case 10B
cof none
trig sin cos
vanish c*f - d*e
shift +1 0
k1 (m + n + 1)*d
i2 b
alg +1 0 sin : -1
rev

rule 10B.4 case 10B
cof none
vanish c*f - d*e
shift +1 -1
k1 d
i2 -f
rev

rule 10B.5 case 10B
cof none
trig cos cos
vanish c*f - d*e
shift +1 -1
k1 d
i2 -f
rev

rule 10B.6 case 10B
cof none
trig sin sin
vanish c*f - d*e
shift +1 -1
k1 d
i2 -f
rev

section 11 form LLQ

rule 11A.1 case 11A
cof ABC
guard a*d - b*c
guard ra*a - rb*b
guard rc*c - rd*d
guard 4*e*g - f^2
shift +1 0 0
k1 u*1/2*(ra*a - rb*b)
i2 ((A*f - B*e)*b - U*a)*u - V*(v*e + (p + 1)*rd) + ((U*b - (B*g - C*f)*a)*u - V*(v*f + (p + 1)*rc))*x - V*v*g*x^2
alg +1 +1 +1 : V
local U = A*g - C*e
local V = A*b^2 - B*a*b + C*a^2
local u = (m + 1)*(a*d - b*c)
local v = (m + n + 2*p + 4)*d

rule 11A.2 case 11A
cof ABC
guard a*d - b*c
guard ra*a - rb*b
guard rc*c - rd*d
guard 4*e*g - f^2
shift -1 0 0
k1 t*g
i2 -(t*T*a + V*e - W*rg + (t*(T*b + U*a) + V*f - 2*W*rf)*x + (t*U*b + V*g - W*re)*x^2)
alg 0 +1 +1 : -C
local T = A*g - C*e
local U = B*g - C*f
local V = (m + p + 1)*C*(a*d - b*c)
local W = (p + 1)*C
local t = (m + n + 2*p + 3)*d

rule 11A.3 case 11A
cof ABC
guard a*d - b*c
guard ra*a - rb*b
guard rc*c - rd*d
guard 4*e*g - f^2
shift 0 0 +1
k1 u*(4*e*g - f^2)
i2 -((2*A*g - B*f + 2*C*e)*u + V*(v*b*c + w*a*d) + W*(a*c*g + (p + 1)*rf) + ((v + w)*V*b*d + W*(((v + 1)*b*c + (w + 1)*a*d)*g + (p + 1)*re))*x + (v + w + 1)*W*b*d*g*x^2)
alg +1 +1 +1 : V + W*g*x
local V = (A*f - B*e)*se - (A*g - C*e)*sf
local W = A*se - B*sf + C*sg
local u = (p + 1)*1/2*(ra*a - rb*b)*1/2*(rc*c - rd*d)
local v = m + p + 2
local w = n + p + 2

rule 11A.4 case 11A
cof ABC
guard a*d - b*c
guard ra*a - rb*b
guard rc*c - rd*d
guard 4*e*g - f^2
shift 0 0 -1
k1 2*w*(w + b*d)*g
i2 V*(v*e + p*rg) - (U*e + W*a*c)*w + (V*(v*f + 2*p*rf) - (U*f + W*(a*d + b*c))*w)*x + (V*(v*g + p*re) - (U*g + W*b*d)*w)*x^2
alg +1 +1 0 : -(V + C*w*f + 2*C*w*g*x)
local U = 2*(m + n + 2*p + 3)*(A*b*d - C*a*c)*g + C*((m + 1)*ra*c + (n + 1)*rc*a)
local V = 2*(m + n + 2*p + 3)*(B*b*d - C*(a*d + b*c))*g + C*((m + 1)*ra*d + (n + 1)*rc*b)
local W = p*C*(4*e*g - f^2)
local v = (m + p + 1)*b*c + (n + p + 1)*a*d
local w = (m + n + 2*p + 2)*b*d

rule 11A.5 case 11A
cof ABC
guard a*d - b*c
guard ra*a - rb*b
guard rc*c - rd*d
guard 4*e*g - f^2
shift +1 -1 0
k1 u*b
i2 -(U*c - V*(v*e + w*rd) + (U*d + C*u*c - V*(v*f + w*rc))*x + (C*u*d - V*v*g)*x^2)
alg +1 0 +1 : -2*V
local U = (m + 1)*(A*ra*b - (B*b - C*a)*rb)
local V = A*b^2 - (B*b - C*a)*a
local u = (m + 1)*(ra*a - rb*b)
local v = 2*(m + n + 2*p + 3)*d
local w = m + 2*p + 3

rule 11A.6 case 11A
cof ABC
guard a*d - b*c
guard ra*a - rb*b
guard rc*c - rd*d
guard 4*e*g - f^2
shift -1 0 +1
k1 u*1/2*(rc*c - rd*d)
i2 -(U*u*a + V*(m*b*c + (n + 1)*a*d) + w*W*a*c + ((U*u + v*V*d)*b + W*((w + m)*b*c + (w + n + 1)*a*d))*x + (v + w)*W*b*d*x^2)
alg 0 +1 +1 : V + W*x
local U = A*d^2 - B*c*d + C*c^2
local V = (A*f - B*e)*rc - (A*g - C*e)*rd
local W = (A*g - C*e)*rc - (B*g - C*f)*rd
local u = (p + 1)*(4*e*g - f^2)
local v = m + n + 1
local w = 2*p + 3

rule 11A.7 case 11A
cof ABC
guard a*d - b*c
guard ra*a - rb*b
guard rc*c - rd*d
guard 4*e*g - f^2
shift +1 0 -1
k1 v*w*b^2
i2 -(U*e + V*v*(u*e + p*rd) - p*C*w*rg + (U*f + V*v*(u*f + p*rc) - 2*p*C*w*rf)*x + ((U + V*u*v)*g - p*C*w*re)*x^2)
alg +1 +1 0 : V*v - C*w*a - C*w*b*x
local U = (m + 1)*((m + n + 2*p + 3)*(A*d^2 - B*c*d + C*c^2)*b^2 - (n + p + 1)*C*(a*d - b*c)^2)
local V = A*b^2 - B*a*b + C*a^2
local u = (n + 2*p + 1)*d
local v = (m + n + 2*p + 3)*d
local w = (m + 1)*(a*d - b*c)

rule 11B.1 case 11B
cof AB
vanish a*d - b*c
guard ra*a - rb*b
guard 4*e*g - f^2
shift +1 0 0
k1 u*(ra*a - rb*b)
i2 -(u*(A*ra - B*rb) - v*V*f - 2*v*V*g*x)
alg +1 0 +1 : -2*V
local V = A*b - B*a
local u = m + n + 1
local v = m + n + 2*p + 3

rule 11B.2 case 11B
cof AB
vanish a*d - b*c
guard ra*a - rb*b
guard 4*e*g - f^2
shift -1 0 0
k1 2*u*g
i2 -(u*U*a + V*rb + (u*U*b + V*ra)*x)
alg 0 0 +1 : -2*B
local U = 2*A*g - B*f
local V = (m + n)*B
local u = m + n + 2*p + 2

rule 11B.3 case 11B
cof AB
vanish a*d - b*c
guard ra*a - rb*b
guard 4*e*g - f^2
shift 0 0 +1
k1 (p + 1)*1/2*(ra*a - rb*b)*(4*e*g - f^2)
i2 U*u - V*((p + 1)*ra + a*g) - V*(u + b)*g*x
alg +1 0 +1 : -(U - V*g*x)
local U = A*rb*g - (A*f - B*e)*ra
local V = A*ra - B*rb
local u = (m + n + 2*p + 3)*b

rule 11B.4 case 11B
cof AB
vanish a*d - b*c
guard ra*a - rb*b
guard 4*e*g - f^2
shift 0 0 -1
k1 2*v*(v + b)*g
i2 p*(U*rb - V*v*a + (U*ra - V*v*b)*x)
alg +1 0 0 : -(U + B*v*f + 2*B*v*g*x)
local U = 2*(m + n + 2*p + 2)*(A*b - B*a)*g + (m + n + 1)*B*ra
local V = B*(4*e*g - f^2)
local v = (m + n + 2*p + 1)*b

rule 11B.5 case 11B
cof AB
vanish a*d - b*c
guard ra*a - rb*b
guard 4*e*g - f^2
shift +1 -1 0
k1 b
i2 -d*(A + B*x)

rule 11B.6 case 11B
cof AB
vanish a*d - b*c
guard ra*a - rb*b
guard 4*e*g - f^2
shift -1 0 +1
k1 (p + 1)*(4*e*g - f^2)
i2 -((m + n)*U*b + v*V*a + (v + m + n)*V*b*x)
alg 0 0 +1 : U + V*x
local U = A*f - 2*B*e
local V = 2*A*g - B*f
local v = 2*p + 3

rule 11B.7 case 11B
cof AB
vanish a*d - b*c
guard ra*a - rb*b
guard 4*e*g - f^2
shift +1 0 -1
k1 u*v*b^2
i2 p*(u*U*f + v*B*rb + (2*u*U*g + v*B*ra)*x)
alg +1 0 0 : -(u*U + v*B*a + v*B*b*x)
local U = A*b - B*a
local u = m + n + 2*p + 2
local v = m + n + 1

rule 11C.1 case 11C
cof AB
vanish ra*a - rb*b
guard a*d - b*c
guard 4*e*g - f^2
shift +1 0 0
k1 u*(a*d - b*c)
i2 -((A*d - B*c)*u + (n + 1)*(A*re - B*rf) - V*v*c - V*v*d*x)
alg 0 +1 +1 : -V*b
local V = A*b - B*a
local u = (m + p + 1)*ra
local v = (m + n + 2*p + 3)*g

rule 11C.2 case 11C
cof AB
vanish ra*a - rb*b
guard a*d - b*c
guard 4*e*g - f^2
shift -1 0 0
k1 u*d*g
i2 -(u*U*a + V*c + W*rf + (u*U*b + V*d + W*re)*x)
alg -1 +1 +1 : -B*b
local U = (A*d - B*c)*g
local V = (m + p)*B*ra
local W = (n + 1)*B
local u = m + n + 2*p + 2

rule 11C.3 case 11C
cof AB
vanish ra*a - rb*b
guard a*d - b*c
guard 4*e*g - f^2
shift 0 +1 0
k1 (n + 1)*1/2*(rc*c - rd*d)*b
i2 -((n + 1)*(A*re - B*rf) - V*(v*a - (m + p + 1)*ra) - V*v*b*x)
alg 0 +1 +1 : -V*b
local V = A*d - B*c
local v = (m + n + 2*p + 3)*g

rule 11C.4 case 11C
cof AB
vanish ra*a - rb*b
guard a*d - b*c
guard 4*e*g - f^2
shift 0 -1 0
k1 (m + n + 2*p + 2)*b*g
i2 -(U*c + n*B*rf + (U*d + n*B*re)*x)
alg 0 0 +1 : -B*b
local U = (m + n + 2*p + 2)*(A*b - B*a)*g + (m + p + 1)*B*ra

rule 11C.5 case 11C
cof AB
vanish ra*a - rb*b
guard a*d - b*c
guard 4*e*g - f^2
shift 0 0 +1
k1 (p + 1)*u*(rc*c - rd*d)
i2 -(((w + n)*U*u + (n + 1)*(V - W*f))*d - 2*(w + m)*W*c*g - 2*(w + m + n + 1)*W*d*g*x)
alg 0 +1 +1 : U*u + V - W*f - 2*W*g*x
local U = A*d - B*c
local V = m*(A*se - B*sf)
local W = m*(A*re - B*rf) - (m + p + 1)*(A*rc - B*rd)*b
local u = (m + p + 1)*(4*e*g - f^2)*b
local w = 2*p + 3

rule 11C.6 case 11C
cof AB
vanish ra*a - rb*b
guard a*d - b*c
guard 4*e*g - f^2
shift 0 0 -1
k1 2*v*(v + d)*b*g
i2 -(U*(m*rf - w*rd) + V*sf + W*w*c + (U*(m*re - w*rc) + V*se + W*w*d)*x)
alg 0 +1 0 : -(U*b + B*(m*ra*d + v*b*f) + 2*B*v*b*g*x)
local U = 2*(m + n + 2*p + 2)*(A*d - B*c)*g + (n + 1)*B*rc
local V = m*(n + 1)*B*d
local W = (n + 2*p + 1)*B*(4*e*g - f^2)*d
local v = (m + n + 2*p + 1)*d
local w = (m + p)*b

rule 11C.7 case 11C
cof AB
vanish ra*a - rb*b
guard a*d - b*c
guard 4*e*g - f^2
shift +1 -1 0
k1 (m + p + 1)*ra*b
i2 n*(A*re - B*rf) - V*c - V*d*x
alg 0 0 +1 : (A*b - B*a)*b
local V = (m + n + 2*p + 2)*(A*b - B*a)*g + (m + p + 1)*B*ra

rule 11C.8 case 11C
cof AB
vanish ra*a - rb*b
guard a*d - b*c
guard 4*e*g - f^2
shift -1 +1 0
k1 (n + 1)*re*d
i2 -b*(U*rf + V*(v*a - (m + p)*ra) + (U*re + V*v*b)*x)
alg -1 +1 +1 : V*b^2
local U = (n + 1)*B
local V = A*d - B*c
local v = (m + n + 2*p + 2)*g

rule 11C.9 case 11C
cof AB
vanish ra*a - rb*b
guard a*d - b*c
guard 4*e*g - f^2
shift -1 0 +1
k1 (p + 1)*se
i2 -b*((n + 1)*(A*re - B*rf) - (n + p + 2)*(A*d - B*c)*ra - v*V*c - v*V*d*x)
alg 0 +1 +1 : -V
local V = A*b*g + B*(a*g - b*f)
local v = m + n + 2*p + 3

rule 11C.10 case 11C
cof AB
vanish ra*a - rb*b
guard a*d - b*c
guard 4*e*g - f^2
shift +1 0 -1
k1 u*b^2*d
i2 u*U*(a*g - b*f) + V*c - W*rf - (u*U*b*g - V*d + W*re)*x
alg +1 +1 0 : -B*b
local U = A*d - B*c
local V = (n + p + 1)*B*ra
local W = (n + 1)*B
local u = m + n + 2*p + 2

rule 11C.11 case 11C
cof AB
vanish ra*a - rb*b
guard a*d - b*c
guard 4*e*g - f^2
shift 0 -1 +1
k1 2*(m + p + 1)*(p + 1)*(4*e*g - f^2)*b
i2 -(n*U*d + v*V*c + (v + n)*V*d*x)
alg 0 0 +1 : U + V*x
local U = m*A*ra + (m + 2*p + 2)*(A*f - 2*B*e)*b
local V = (m + 2*p + 2)*(2*A*g - B*f)*b + m*B*ra
local v = m + 2*p + 3

rule 11C.12 case 11C
cof AB
vanish ra*a - rb*b
guard a*d - b*c
guard 4*e*g - f^2
shift 0 +1 -1
k1 (m + n + 2*p + 2)*v*b*d
i2 U*(u*f - w) - B*u*v*e + (U*u*g - B*v*w)*x
alg 0 +1 0 : -b*(U + B*v*x)
local U = (m + n + 2*p + 2)*A*d - (m + 2*p + 1)*B*c
local u = (m + 2*p)*b
local v = (n + 1)*d
local w = m*a*g + p*b*f

rule 11D.1 case 11D
cof AB
vanish 4*e*g - f^2
guard ra
guard rc
shift +1 0 0
k1 u*(a*d - b*c)
i2 -((A*d - B*c)*u - V*(v*c - (n + 1)*rc) - V*v*d*x)
alg +1 +1 0 : -V*(f + 2*g*x)
local V = A*b - B*a
local u = (m + 1)*ra
local v = 2*(m + n + 2*p + 3)*g

rule 11D.2 case 11D
cof AB
vanish 4*e*g - f^2
guard ra
guard rc
shift -1 0 0
k1 2*(m + n + 2*p + 2)*d*g
i2 -(U*a + V*f + (U*b + 2*V*g)*x)
alg 0 +1 0 : -B*(f + 2*g*x)
local U = 2*(m + n + 2*p + 2)*(A*d - B*c)*g + (m + n + 1)*B*rc
local V = m*B*(a*d - b*c)

rule 11D.3 case 11D
cof AB
vanish 4*e*g - f^2
guard ra
guard rc
shift 0 0 +1
k1 u*w
i2 v*(U*a*d + V*b*c - A*w*b*d) - (U + V - B*w)*((v + m + 1)*b*c + (v + n + 1)*a*d) - (v + m + n + 2)*(U + V - B*w)*b*d*x
alg +1 +1 0 : -u*(A*f - 2*B*e + (2*A*g - B*f)*x)
alg +1 +1 +1 : U + V - B*w
local U = (m + 2*p + 2)*(A*rc - B*rd)*b
local V = (n + 2*p + 2)*(A*ra - B*rb)*d
local u = (p + 1)*(ra*c - rb*d)
local v = 2*(p + 1)
local w = (2*p + 1)*(ra*c - rb*d)

rule 11D.4 case 11D
cof AB
vanish 4*e*g - f^2
guard ra
guard rc
shift 0 0 -1
k1 2*t*(t + b*d)
i2 V*u + v*(V*b + W*a)*rd + w*(V*d + W*c)*rb + (v*(V*b + W*a)*rc + w*(V*d + W*c)*ra - W*u)*x
alg +1 +1 -1 : -(V*f + 2*W*e + (2*V*g + W*f)*x)
alg +1 +1 0 : -2*B*t
local V = (m + n + 2*p + 2)*A*b*d - B*((m + 2*p + 1)*b*c + (n + 2*p + 1)*a*d)
local W = 2*p*B*b*d
local t = (m + n + 2*p + 1)*b*d
local u = (2*p - 1)*(ra*c - rb*d)
local v = m + 2*p
local w = n + 2*p

rule 11D.5 case 11D
cof AB
vanish 4*e*g - f^2
guard ra
guard rc
shift +1 -1 0
k1 u*b
i2 -((B*u + V*v)*c - n*V*rc + (B*u + V*v)*d*x)
alg +1 0 0 : V*(f + 2*g*x)
local V = A*b - B*a
local u = (m + 1)*ra
local v = 2*(m + n + 2*p + 2)*g

rule 11D.6 case 11D
cof AB
vanish 4*e*g - f^2
guard ra
guard rc
shift -1 0 +1
k1 (2*p + 1)*u*rc
i2 -(V*(v*a*d - m*w) + W*(v*b*c + (n + 1)*w) + v*(V + W)*b*d*x)
alg 0 +1 0 : -u*(A*f - 2*B*e + (2*A*g - B*f)*x)
alg 0 +1 +1 : V + W
local V = (n + 1)*(A*ra - B*rb)*d + (2*p + 1)*(A*d - B*c)*ra
local W = m*(A*rc - B*rd)*b
local u = (p + 1)*(ra*c - rb*d)
local v = m + n + 2*p + 3
local w = a*d - b*c

rule 11D.7 case 11D
cof AB
vanish 4*e*g - f^2
guard ra
guard rc
shift +1 0 -1
k1 (m + n + 2*p + 2)*v*w*b*d
i2 U*((n + 1)*rb*d + (2*p - 1)*ra*c) + (U + p*B*v)*w*rd + (U*(n + 2*p)*ra*d + (U + p*B*v)*w*rc)*x
alg +1 +1 -1 : -U*(rb + ra*x)
alg +1 +1 0 : -B*v*w
local U = (m + 1)*(A*d - B*c)*b + (n + 2*p + 1)*(A*b - B*a)*d
local v = 2*(a*d - b*c)
local w = (m + 1)*b

rule 11E.1 case 11E-1
cof none
vanish a*d - b*c
vanish ra*a - rb*b
guard ra
shift +1 0 0
k1 u*ra
i2 -(u + p + 1)*g
alg 0 0 +1 : b
local u = m + n + p + 1
rev

rule 11E.2 case 11E-1
cof none
vanish a*d - b*c
vanish ra*a - rb*b
guard ra
shift 0 0 +1
k1 (m + n + p + 1)*(p + 1)*(4*e*g - f^2)*b
i2 -w*(w + 1)*b*g
alg 0 0 +1 : -((p + 1)*ra - w*a*g - w*b*g*x)
local w = m + n + 2*p + 2
rev

rule 11E.3 case 11E-1
cof none
vanish a*d - b*c
vanish ra*a - rb*b
guard ra
shift +1 -1 0
k1 b
i2 -d
rev

rule 11E.4 case 11E-1
cof none
vanish a*d - b*c
vanish ra*a - rb*b
guard ra
shift -1 0 +1
k1 (p + 1)*ra
i2 (m + n + 2*p + 2)*b^2
alg 0 0 +1 : -b
rev

rule 11E.5 case 11E-2
cof none
vanish a*d - b*c
vanish 4*e*g - f^2
guard ra
shift +1 0 0
k1 (m + n + 1)*ra
i2 -2*(m + n + 2*p + 2)*g
alg +1 0 0 : f + 2*g*x
rev

rule 11E.6 case 11E-2
cof none
vanish a*d - b*c
vanish 4*e*g - f^2
guard ra
shift 0 0 +1
k1 (p + 1)*(2*p + 1)*(ra*a - rb*b)
i2 -w*(w + b)
alg +1 0 0 : -(p + 1)*(rb + ra*x)
alg +1 0 +1 : w
local w = (m + n + 2*p + 2)*b
rev

rule 11E.7 case 11E-2
cof none
vanish a*d - b*c
vanish 4*e*g - f^2
guard ra
shift +1 -1 0
k1 b
i2 -d
rev

rule 11E.8 case 11E-2
cof none
vanish a*d - b*c
vanish 4*e*g - f^2
guard ra
shift -1 0 +1
k1 (p + 1)*(2*p + 1)*ra
i2 -(m + n + 2*p + 2)*w*b
alg 0 0 0 : -(p + 1)*(rb + ra*x)
alg 0 0 +1 : w
local w = (m + n)*b
rev

rule 11E.9 case 11E-3
cof none
vanish re
vanish rf
guard a*d - b*c
shift +1 0 0
k1 (m + p + 1)*(a*d - b*c)
i2 -(m + n + 2*p + 2)*d
alg +1 +1 0 : 1
rev

rule 11E.10 case 11E-3
cof none
vanish re
vanish rf
guard a*d - b*c
shift 0 0 +1
k1 u*v*(ra*c - rb*d)
i2 -(u + v)*(u + v + 1)*b*d
alg 0 0 +1 : u*a*d + v*b*c + (u + v)*b*d*x
local u = m + p + 1
local v = n + p + 1
rev

rule 11E.11 case 11E-3
cof none
vanish re
vanish rf
guard a*d - b*c
shift +1 -1 0
k1 (m + p + 1)*b
i2 (n + p)*d
alg +1 0 0 : -1
rev

rule 11E.12 case 11E-3
cof none
vanish re
vanish rf
guard a*d - b*c
shift -1 0 +1
k1 (n + p + 1)*ra
i2 (m + n + 2*p + 2)*b^2
alg 0 0 +1 : -b
rev

rule 11E.13 case 11E-4
cof none
vanish ra
vanish rb
guard a*d - b*c
shift +1 0 0
k1 u*(a*d - b*c)
i2 -(u + n + 1)*d
alg +1 +1 0 : 1
local u = m + 2*p + 1
rev

rule 11E.14 case 11E-4
cof none
vanish ra
vanish rb
guard a*d - b*c
shift 0 +1 0
k1 (n + 1)*(a*d - b*c)
i2 (m + n + 2*p + 2)*b
alg +1 +1 0 : -1
rev

rule 11E.15 case 11E-4
cof none
vanish ra
vanish rb
guard a*d - b*c
shift 0 0 +1
k1 (m + 2*p + 1)*u*1/2*(rc*c - rd*d)
i2 -v*(v + d)
alg -1 +1 +1 : u*(a*d - b*c) + v*a + v*b*x
local u = m + 2*p + 2
local v = (m + n + 2*p + 2)*d
rev

rule 11E.16 case 11E-4
cof none
vanish ra
vanish rb
guard a*d - b*c
shift +1 -1 0
k1 (m + 2*p + 1)*b
i2 n*d
alg +1 0 0 : -1
rev

rule 11E.17 case 11E-4
cof none
vanish ra
vanish rb
guard a*d - b*c
shift -1 0 +1
k1 u*rc
i2 2*(u + n + 1)*b*d
alg -1 +1 +1 : -2*b
local u = m + 2*p + 1
rev

rule 11E.18 case 11E-4
cof none
vanish ra
vanish rb
guard a*d - b*c
shift 0 -1 +1
k1 (m + 2*p + 1)*u*rc
i2 -2*n*v*d
alg -1 0 +1 : -2*(u*b*c - v*a - n*b*d*x)
local u = m + 2*p + 2
local v = (m + n + 2*p + 2)*d
rev

section 12 form LLLL

rule 12A.1 case 12A
cof ABC
guard a*d - b*c
guard a*f - b*e
guard a*h - b*g
guard c*f - d*e
guard c*h - d*g
guard e*h - f*g
shift +1 0 0 0
k1 (m + 1)*(a*d - b*c)*(a*f - b*e)*(a*h - b*g)
i2 (m + 1)*(A*(saa*a - sab*b) + (B*b - C*a)*sbb) - W*((n + 1)*d*e*g + (p + 1)*c*f*g + (q + 1)*c*e*h) - ((m + 1)*((A*b - B*a)*saa + C*(sab*a - sbb*b)) + W*((n + p + 2)*d*f*g + (n + q + 2)*d*e*h + (p + q + 2)*c*f*h))*x - (m + n + p + q + 4)*W*d*f*h*x^2
alg +1 +1 +1 +1 : W
local W = A*b^2 - B*a*b + C*a^2

rule 12A.2 case 12A
cof ABC
guard a*d - b*c
guard a*f - b*e
guard a*h - b*g
guard c*f - d*e
guard c*h - d*g
guard e*h - f*g
shift -1 0 0 0
k1 u
i2 -((A*u - V)*a - m*C*sbb + ((A*u - V)*b + (B*u - W)*a - m*C*sab)*x + ((B*u - W)*b - m*C*saa)*x^2)
alg 0 +1 +1 +1 : -C
local V = C*((n + 1)*d*e*g + (p + 1)*c*f*g + (q + 1)*c*e*h)
local W = C*((n + p + 2)*d*f*g + (n + q + 2)*d*e*h + (p + q + 2)*c*f*h)
local u = (m + n + p + q + 3)*d*f*h

rule 12A.3 case 12A
cof ABC
guard a*d - b*c
guard a*f - b*e
guard a*h - b*g
guard c*f - d*e
guard c*h - d*g
guard e*h - f*g
shift +1 -1 0 0
k1 u*b
i2 U*c + V*(n*d*e*g + (p + 1)*c*f*g + (q + 1)*c*e*h) + (U*d - C*u*c + V*(v*c*f*h + (n + p + 1)*d*f*g + (n + q + 1)*d*e*h))*x - (C*u - (v + n)*V*f*h)*d*x^2
alg +1 0 +1 +1 : -V
local U = (m + 1)*(A*ra*b - (B*b - C*a)*rb)
local V = A*b^2 - (B*b - C*a)*a
local u = (m + 1)*(a*f - b*e)*(a*h - b*g)
local v = m + p + q + 3

rule 12B.1 case 12B
cof AB
vanish a*d - b*c
guard a*f - b*e
guard a*h - b*g
guard e*h - f*g
shift +1 0 0 0
k1 u*(a*f - b*e)*(a*h - b*g)
i2 u*(A*ra - B*rb) + V*((q + 1)*e*h + (p + 1)*f*g) + (u + p + q + 2)*V*f*h*x
alg +1 0 +1 +1 : -V
local V = A*b - B*a
local u = m + n + 1

rule 12B.2 case 12B
cof AB
vanish a*d - b*c
guard a*f - b*e
guard a*h - b*g
guard e*h - f*g
shift -1 0 0 0
k1 (m + n + p + q + 2)*f*h
i2 -(U*a - V*rb + (U*b - V*ra)*x)
alg 0 0 +1 +1 : -B
local U = (m + n + p + q + 2)*A*f*h - B*((p + 1)*f*g + (q + 1)*e*h)
local V = (m + n)*B

rule 12B.3 case 12B
cof AB
vanish a*d - b*c
guard a*f - b*e
guard a*h - b*g
guard e*h - f*g
shift 0 0 +1 0
k1 (p + 1)*(a*f - b*e)*(e*h - f*g)
i2 -((p + 1)*(A*re - B*rf) + V*((m + n + 1)*b*g + (q + 1)*a*h) + (m + n + p + q + 3)*V*b*h*x)
alg +1 0 +1 +1 : V
local V = A*f - B*e

rule 12B.4 case 12B
cof AB
vanish a*d - b*c
guard a*f - b*e
guard a*h - b*g
guard e*h - f*g
shift 0 0 -1 0
k1 (m + n + p + q + 2)*b*h
i2 -(U*e - p*B*rf + (U*f - p*B*re)*x)
alg +1 0 0 +1 : -B
local U = A*(m + n + p + q + 2)*b*h - B*((m + n + 1)*b*g + (q + 1)*a*h)

rule 12B.5 case 12B
cof AB
vanish a*d - b*c
guard a*f - b*e
guard a*h - b*g
guard e*h - f*g
shift +1 -1 0 0
k1 b
i2 -d*(A + B*x)

rule 12B.6 case 12B
cof AB
vanish a*d - b*c
guard a*f - b*e
guard a*h - b*g
guard e*h - f*g
shift +1 0 -1 0
k1 u*b
i2 -(B*u*e + V*(v*e*h + p*f*g) + (B*u + (v + p)*V*h)*f*x)
alg +1 0 0 +1 : V
local V = A*b - B*a
local u = (m + n + 1)*(a*h - b*g)
local v = m + n + q + 2

rule 12B.7 case 12B
cof AB
vanish a*d - b*c
guard a*f - b*e
guard a*h - b*g
guard e*h - f*g
shift -1 0 +1 0
k1 u*f
i2 -(B*u*a + V*(v*a*h + (m + n)*b*g) + (B*u + (v + m + n)*V*h)*b*x)
alg 0 0 +1 +1 : V
local V = A*f - B*e
local u = (p + 1)*(e*h - f*g)
local v = p + q + 2

rule 12B.8 case 12B
cof AB
vanish a*d - b*c
guard a*f - b*e
guard a*h - b*g
guard e*h - f*g
shift 0 0 +1 -1
k1 u*f
i2 -(B*u*g - V*(v*b*g + q*a*h) + (B*u - (v + q)*V*b)*h*x)
alg +1 0 +1 0 : -V
local V = A*f - B*e
local u = (p + 1)*(a*f - b*e)
local v = m + n + p + 2

rule 12C.1 case 12C-1
cof none
vanish a*d - b*c
vanish a*f - b*e
guard a*h - b*g
shift +1 0 0 0
k1 u*(a*h - b*g)
i2 -(u + q + 1)*h
alg +1 0 0 +1 : 1
local u = m + n + p + 1
rev

rule 12C.2 case 12C-1
cof none
vanish a*d - b*c
vanish a*f - b*e
guard a*h - b*g
shift 0 0 0 +1
k1 (q + 1)*(a*h - b*g)
i2 (m + n + p + q + 2)*b
alg +1 0 0 +1 : -1
rev

rule 12C.3 case 12C-1
cof none
vanish a*d - b*c
vanish a*f - b*e
guard a*h - b*g
shift +1 -1 0 0
k1 b
i2 -d
rev

rule 12C.4 case 12C-1
cof none
vanish a*d - b*c
vanish a*f - b*e
guard a*h - b*g
shift +1 0 0 -1
k1 (m + n + p + 1)*b
i2 q*h
alg +1 0 0 0 : -1
rev

rule 12C.5 case 12C-2
cof none
vanish a*d - b*c
vanish e*h - f*g
guard a*f - b*e
shift +1 0 0 0
k1 (m + n + 1)*(a*f - b*e)
i2 -(m + n + p + q + 2)*f
alg +1 0 +1 0 : 1
rev

rule 12C.6 case 12C-2
cof none
vanish a*d - b*c
vanish e*h - f*g
guard a*f - b*e
shift +1 -1 0 0
k1 b
i2 -d
rev

rule 12C.7 case 12C-2
cof none
vanish a*d - b*c
vanish e*h - f*g
guard a*f - b*e
shift +1 0 -1 0
k1 (m + n + 1)*b
i2 (p + q)*f
alg +1 0 0 0 : -1
rev
)CATALOG";

}  // namespace recur
