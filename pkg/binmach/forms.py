from django import forms

from .cli import max_parallel
from .exceptions import BinMachError
from .machine import DcPolicy
from .sequence import parse_sequence
from .synth import PermutationPolicy

DC_CHOICES = [(p.value, p.value) for p in DcPolicy]


class SequenceForm(forms.Form):
    """Sequence text plus the synthesis flags shared by both endpoints."""
    sequence = forms.CharField(strip=False)
    parallel = forms.IntegerField(required=False, min_value=1)
    dc_policy = forms.ChoiceField(choices=DC_CHOICES, required=False)

    default_dc_policy = DcPolicy.ZERO

    def clean_sequence(self):
        try:
            a = parse_sequence(self.cleaned_data["sequence"])
        except BinMachError as exc:
            raise forms.ValidationError(str(exc), code="format")
        if a.m != 2:
            raise forms.ValidationError("expected a binary sequence", code="alphabet")
        return a

    def clean_parallel(self):
        p = self.cleaned_data.get("parallel")
        if p is not None and p > max_parallel():
            raise forms.ValidationError(f"parallel must be <= {max_parallel()}", code="range")
        return p

    def clean_dc_policy(self):
        value = self.cleaned_data.get("dc_policy")
        return DcPolicy(value) if value else self.default_dc_policy


class SynthForm(SequenceForm):
    perm = forms.CharField(required=False)

    def clean_parallel(self):
        return super().clean_parallel() or 1

    def clean_perm(self):
        text = self.cleaned_data.get("perm") or "identity"
        try:
            return PermutationPolicy.parse(text)
        except BinMachError as exc:
            raise forms.ValidationError(str(exc), code="perm")


class CompareForm(SequenceForm):
    default_dc_policy = DcPolicy.MINIMIZE
