from django import forms

from core.models.watermark import ChannelPolicy


class WatermarkOptionsForm(forms.Form):
    """Preset and per-call overrides shared by embed and extract."""
    preset = forms.CharField(max_length=64)
    x0 = forms.FloatField(required=False)
    mu_c = forms.FloatField(required=False)
    delta = forms.FloatField(required=False)
    coeff_index = forms.IntegerField(required=False, min_value=0)
    channels = forms.ChoiceField(required=False, choices=ChannelPolicy.choices)

    def clean_x0(self):
        x0 = self.cleaned_data.get('x0')
        if x0 is not None and not 0 < x0 < 1:
            raise forms.ValidationError("--x0 must lie in (0, 1).")
        return x0

    def clean_mu_c(self):
        mu_c = self.cleaned_data.get('mu_c')
        if mu_c is not None and not 0 < mu_c < 0.5:
            raise forms.ValidationError("--chaos-mu must lie in (0, 0.5).")
        return mu_c

    def clean_delta(self):
        delta = self.cleaned_data.get('delta')
        if delta is not None and not delta > 0:
            raise forms.ValidationError("--delta must be positive.")
        return delta

    def clean_channels(self):
        return self.cleaned_data.get('channels') or None
