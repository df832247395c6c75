from django import forms

from core.models.family import FamilyKind, FamilyParams
from core.models.sobolev import SobolevParams
from core.exceptions import SobomarkError

DEFAULT_PRESET = 'CS_I'


class VerifyForm(forms.Form):
    """Either a preset name or a full family + Sobolev parameter set."""
    preset = forms.CharField(required=False, max_length=64)
    family = forms.ChoiceField(required=False, choices=FamilyKind.choices)
    mu = forms.FloatField(required=False)
    gamma = forms.FloatField(required=False)
    lam = forms.FloatField(required=False)
    alpha = forms.FloatField(required=False)
    j = forms.IntegerField(required=False, min_value=0)
    n_max = forms.IntegerField(required=False, min_value=1, max_value=16)
    grid = forms.IntegerField(required=False, min_value=0, max_value=200)

    def clean(self):
        cleaned = super().clean()
        explicit = [name for name in ('family', 'mu', 'gamma', 'lam', 'alpha', 'j')
                    if cleaned.get(name) not in (None, '')]
        if cleaned.get('preset') and explicit:
            raise forms.ValidationError("Give either --preset or explicit parameters, not both.")
        if not cleaned.get('preset') and not explicit:
            cleaned['preset'] = DEFAULT_PRESET
        if not cleaned.get('preset'):
            missing = [name for name in ('family', 'mu', 'lam', 'alpha', 'j')
                       if cleaned.get(name) in (None, '')]
            if missing:
                raise forms.ValidationError(
                    f"Without --preset, --{' --'.join(missing)} {'is' if len(missing) == 1 else 'are'} required."
                )
            try:
                cleaned['family_params'] = FamilyParams(cleaned['family'], cleaned['mu'], cleaned.get('gamma'))
                cleaned['sobolev_params'] = SobolevParams(cleaned['alpha'], cleaned['lam'], cleaned['j'])
            except SobomarkError as exc:
                raise forms.ValidationError(exc.messages)
        return cleaned
