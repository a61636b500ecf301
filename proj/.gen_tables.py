#!/usr/bin/env python3
"""One-off generator for the bundled data files (dev helper, not shipped)."""
import math, os

# Homo sapiens codon usage per 1000, classic Kazusa table (93,487 CDSs).
USAGE = {
 'TTT':17.6,'TTC':20.3,'TTA':7.7,'TTG':12.9,
 'CTT':13.2,'CTC':19.6,'CTA':7.2,'CTG':39.6,
 'ATT':16.0,'ATC':20.8,'ATA':7.5,'ATG':22.0,
 'GTT':11.0,'GTC':14.5,'GTA':7.1,'GTG':28.1,
 'TCT':15.2,'TCC':17.7,'TCA':12.2,'TCG':4.4,
 'CCT':17.5,'CCC':19.8,'CCA':16.9,'CCG':6.9,
 'ACT':13.1,'ACC':18.9,'ACA':15.1,'ACG':6.1,
 'GCT':18.4,'GCC':27.7,'GCA':15.8,'GCG':7.4,
 'TAT':12.2,'TAC':15.3,'TAA':1.0,'TAG':0.8,
 'CAT':10.9,'CAC':15.1,'CAA':12.3,'CAG':34.2,
 'AAT':17.0,'AAC':19.1,'AAA':24.4,'AAG':31.9,
 'GAT':21.8,'GAC':25.1,'GAA':29.0,'GAG':39.6,
 'TGT':10.6,'TGC':12.6,'TGA':1.6,'TGG':13.2,
 'CGT':4.5,'CGC':10.4,'CGA':6.2,'CGG':11.4,
 'AGT':12.1,'AGC':19.5,'AGA':12.2,'AGG':12.0,
 'GGT':10.8,'GGC':22.2,'GGA':16.5,'GGG':16.5,
}

# Approximate human tRNA gene copy numbers by anticodon (DNA letters).
TGCN = {
 'AGC':29,'CGC':4,'TGC':11,                      # Ala
 'ACG':7,'CCG':4,'TCG':6,'CCT':5,'TCT':6,        # Arg
 'GTT':33,                                       # Asn
 'GTC':19,                                       # Asp
 'GCA':30,                                       # Cys
 'CTG':21,'TTG':11,                              # Gln
 'CTC':13,'TTC':13,                              # Glu
 'GCC':15,'CCC':7,'TCC':9,                       # Gly
 'GTG':11,                                       # His
 'AAT':14,'GAT':3,'TAT':5,                       # Ile
 'AAG':12,'CAG':10,'TAG':3,'CAA':7,'TAA':4,      # Leu
 'CTT':17,'TTT':13,                              # Lys
 'CAT':20,                                       # Met
 'GAA':12,                                       # Phe
 'AGG':10,'CGG':4,'TGG':7,                       # Pro
 'AGA':11,'CGA':4,'TGA':5,'GCT':8,               # Ser
 'AGT':10,'CGT':6,'TGT':6,                       # Thr
 'CCA':9,                                        # Trp
 'ATA':1,'GTA':14,                               # Tyr
 'AAC':11,'CAC':16,'TAC':5,                      # Val
}

COMP = {'A':'T','C':'G','G':'C','T':'A'}
STOPS = {'TAA','TAG','TGA'}
CODE = "KNKNTTTTRSRSIIMIQHQHPPPPRRRRLLLLEDEDAAAAGGGGVVVV*Y*YSSSS*CWCLFLF"
BASES = "ACGT"

def codons():
    for a in BASES:
        for b in BASES:
            for c in BASES:
                yield a + b + c

def anticodon(codon, wobble):
    # anticodon 5'->3' = revcomp(codon) with position 34 replaced by `wobble`
    rc = ''.join(COMP[x] for x in reversed(codon))
    return wobble + rc[1:]

def gcn(ac):
    return TGCN.get(ac, 0)

# dos Reis selective constraints for the wobble interactions used below.
S_GU, S_IC, S_IA, S_UG = 0.41, 0.28, 0.9999, 0.68

def tai_raw(codon):
    third = codon[2]
    if third == 'T':   # read by A34 (inosine) and G34 (G:U wobble)
        return gcn(anticodon(codon, 'A')) + (1 - S_GU) * gcn(anticodon(codon, 'G'))
    if third == 'C':   # read by G34 (WC) and A34-as-inosine (I:C)
        return gcn(anticodon(codon, 'G')) + (1 - S_IC) * gcn(anticodon(codon, 'A'))
    if third == 'A':   # read by U34 (WC) and A34-as-inosine (I:A)
        return gcn(anticodon(codon, 'T')) + (1 - S_IA) * gcn(anticodon(codon, 'A'))
    # third == 'G': read by C34 (WC) and U34 (U:G wobble)
    return gcn(anticodon(codon, 'C')) + (1 - S_UG) * gcn(anticodon(codon, 'T'))

def main():
    here = os.path.dirname(os.path.abspath(__file__))
    data = os.path.join(here, 'data')
    os.makedirs(data, exist_ok=True)

    usage_lines = [
        "# Homo sapiens codon usage, per-1000 values (all 64 codons).",
        "# Classic table as distributed by the Kazusa codon usage database (93,487 CDSs).",
        "# Per-family fractions are derived at load; stop-codon rows feed stop sampling.",
    ]
    for c in codons():
        usage_lines.append(f"{c}\t{USAGE[c]}")
    usage_text = "\n".join(usage_lines) + "\n"
    with open(os.path.join(data, 'human_codon_usage.tsv'), 'w') as f:
        f.write(usage_text)

    raw = {}
    for c in codons():
        if c in STOPS:
            continue
        raw[c] = tai_raw(c)
        assert raw[c] > 0, c
    mx = max(raw.values())
    tai_lines = [
        "# Human tRNA adaptation weights (bundled approximation).",
        "# dos Reis-style construction: W(c) = sum over reading anticodons of (1-s)*tGCN,",
        "# s(G:U)=0.41 s(I:C)=0.28 s(I:A)=0.9999 s(U:G)=0.68, from approximate human tRNA",
        "# gene copy numbers; renormalized so the global max is 1. Override with a measured",
        "# table for publication-grade runs.",
    ]
    for c in codons():
        if c in STOPS:
            continue
        tai_lines.append(f"{c}\t{raw[c] / mx:.6f}")
    tai_text = "\n".join(tai_lines) + "\n"
    with open(os.path.join(data, 'human_tai_weights.tsv'), 'w') as f:
        f.write(tai_text)

    print("wrote data files")
    # sanity: per-family max usage codon, a few spot checks
    fam = {}
    for i, c in enumerate(codons()):
        aa = CODE[i]
        fam.setdefault(aa, []).append(c)
    for aa in 'ALE':
        best = max((USAGE[c], c) for c in fam[aa])
        print(aa, best)

if __name__ == '__main__':
    main()
