#include "mrnaopt/bundled_data.hpp"

namespace mrnaopt::bundled {

std::string_view usage_tsv() {
    static const char kText[] = R"tsv(# Homo sapiens codon usage, per-1000 values (all 64 codons).
# Classic table as distributed by the Kazusa codon usage database (93,487 CDSs).
# Per-family fractions are derived at load; stop-codon rows feed stop sampling.
AAA	24.4
AAC	19.1
AAG	31.9
AAT	17.0
ACA	15.1
ACC	18.9
ACG	6.1
ACT	13.1
AGA	12.2
AGC	19.5
AGG	12.0
AGT	12.1
ATA	7.5
ATC	20.8
ATG	22.0
ATT	16.0
CAA	12.3
CAC	15.1
CAG	34.2
CAT	10.9
CCA	16.9
CCC	19.8
CCG	6.9
CCT	17.5
CGA	6.2
CGC	10.4
CGG	11.4
CGT	4.5
CTA	7.2
CTC	19.6
CTG	39.6
CTT	13.2
GAA	29.0
GAC	25.1
GAG	39.6
GAT	21.8
GCA	15.8
GCC	27.7
GCG	7.4
GCT	18.4
GGA	16.5
GGC	22.2
GGG	16.5
GGT	10.8
GTA	7.1
GTC	14.5
GTG	28.1
GTT	11.0
TAA	1.0
TAC	15.3
TAG	0.8
TAT	12.2
TCA	12.2
TCC	17.7
TCG	4.4
TCT	15.2
TGA	1.6
TGC	12.6
TGG	13.2
TGT	10.6
TTA	7.7
TTC	20.3
TTG	12.9
TTT	17.6
)tsv";
    return std::string_view(kText, sizeof kText - 1);
}

std::string_view tai_tsv() {
    static const char kText[] = R"tsv(# Human tRNA adaptation weights (bundled approximation).
# dos Reis-style construction: W(c) = sum over reading anticodons of (1-s)*tGCN,
# s(G:U)=0.41 s(I:C)=0.28 s(I:A)=0.9999 s(U:G)=0.68, from approximate human tRNA
# gene copy numbers; renormalized so the global max is 1. Override with a measured
# table for publication-grade runs.
AAA	0.393939
AAC	1.000000
AAG	0.641212
AAT	0.590000
ACA	0.181848
ACC	0.218182
ACG	0.240000
ACT	0.303030
AGA	0.181818
AGC	0.242424
AGG	0.209697
AGT	0.143030
ATA	0.151558
ATC	0.396364
ATG	0.654545
ATT	0.477879
CAA	0.333333
CAC	0.333333
CAG	0.743030
CAT	0.196667
CCA	0.212152
CCC	0.218182
CCG	0.189091
CCT	0.303030
CGA	0.181839
CGC	0.152727
CGG	0.179394
CGT	0.212121
CTA	0.090945
CTC	0.261818
CTG	0.332121
CTT	0.363636
GAA	0.393939
GAC	0.575758
GAG	0.520000
GAT	0.339697
GCA	0.333421
GCC	0.632727
GCG	0.227879
GCT	0.878788
GGA	0.272727
GGC	0.454545
GGG	0.299394
GGT	0.268182
GTA	0.151548
GTC	0.240000
GTG	0.533333
GTT	0.333333
TAC	0.446061
TAT	0.280606
TCA	0.151548
TCC	0.240000
TCG	0.169697
TCT	0.333333
TGC	0.909091
TGG	0.272727
TGT	0.536364
TTA	0.121212
TTC	0.363636
TTG	0.250909
TTT	0.214545
)tsv";
    return std::string_view(kText, sizeof kText - 1);
}

std::string_view energy_tsv() {
    static const char kText[] = R"tsv(# Reduced nearest-neighbor RNA energy model, energies in kcal/mol.
# stack OUTER INNER value: outer pair (i,j), inner pair (i+1,j-1), 5'->3' first base.
# Loop penalties by size; sizes beyond the table extend as
# value(max) + loop_extension_coef * ln(size/max).
# Magnitudes follow the Turner-style tables; this model is intentionally
# smaller than RNAfold's and will not match its energies.
stack	CG	CG	-3.26
stack	CG	GC	-2.36
stack	CG	GU	-1.41
stack	CG	UG	-2.11
stack	CG	AU	-2.11
stack	CG	UA	-2.08
stack	GC	CG	-3.42
stack	GC	GC	-3.26
stack	GC	GU	-2.51
stack	GC	UG	-1.53
stack	GC	AU	-2.35
stack	GC	UA	-2.24
stack	GU	CG	-1.53
stack	GU	GC	-2.11
stack	GU	GU	-0.50
stack	GU	UG	-0.30
stack	GU	AU	-1.22
stack	GU	UA	-1.36
stack	UG	CG	-2.51
stack	UG	GC	-1.41
stack	UG	GU	-0.25
stack	UG	UG	-0.50
stack	UG	AU	-1.00
stack	UG	UA	-1.27
stack	AU	CG	-2.24
stack	AU	GC	-2.08
stack	AU	GU	-1.27
stack	AU	UG	-1.36
stack	AU	AU	-0.93
stack	AU	UA	-1.10
stack	UA	CG	-2.35
stack	UA	GC	-2.11
stack	UA	GU	-1.00
stack	UA	UG	-1.22
stack	UA	AU	-1.33
stack	UA	UA	-0.93
hairpin	3	5.40
hairpin	4	5.71
hairpin	5	5.95
hairpin	6	6.15
hairpin	7	6.32
hairpin	8	6.46
hairpin	9	6.59
hairpin	10	6.70
hairpin	11	6.80
hairpin	12	6.90
hairpin	13	6.98
hairpin	14	7.06
hairpin	15	7.14
hairpin	16	7.21
hairpin	17	7.27
hairpin	18	7.34
hairpin	19	7.39
hairpin	20	7.45
hairpin	21	7.50
hairpin	22	7.55
hairpin	23	7.60
hairpin	24	7.65
hairpin	25	7.69
hairpin	26	7.73
hairpin	27	7.77
hairpin	28	7.81
hairpin	29	7.85
hairpin	30	7.89
bulge	1	3.80
bulge	2	4.55
bulge	3	4.99
bulge	4	5.30
bulge	5	5.54
bulge	6	5.74
bulge	7	5.90
bulge	8	6.05
bulge	9	6.17
bulge	10	6.29
bulge	11	6.39
bulge	12	6.48
bulge	13	6.57
bulge	14	6.65
bulge	15	6.72
bulge	16	6.79
bulge	17	6.86
bulge	18	6.92
bulge	19	6.98
bulge	20	7.04
bulge	21	7.09
bulge	22	7.14
bulge	23	7.19
bulge	24	7.23
bulge	25	7.28
bulge	26	7.32
bulge	27	7.36
bulge	28	7.40
bulge	29	7.44
bulge	30	7.47
internal	2	1.70
internal	3	2.14
internal	4	2.45
internal	5	2.69
internal	6	2.89
internal	7	3.05
internal	8	3.20
internal	9	3.32
internal	10	3.44
internal	11	3.54
internal	12	3.64
internal	13	3.72
internal	14	3.80
internal	15	3.88
internal	16	3.95
internal	17	4.01
internal	18	4.07
internal	19	4.13
internal	20	4.19
internal	21	4.24
internal	22	4.29
internal	23	4.34
internal	24	4.38
internal	25	4.43
internal	26	4.47
internal	27	4.51
internal	28	4.55
internal	29	4.59
internal	30	4.62
multiloop	close	3.40
multiloop	branch	0.40
multiloop	unpaired	0.10
option	hairpin_min	3
option	max_interior_span	16
option	loop_extension_coef	1.08
)tsv";
    return std::string_view(kText, sizeof kText - 1);
}

} // namespace mrnaopt::bundled
