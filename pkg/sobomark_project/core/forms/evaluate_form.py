from django import forms


class EvaluateForm(forms.Form):
    presets = forms.CharField()
    seed = forms.IntegerField(min_value=0, required=False)

    def clean_presets(self):
        names = [name.strip() for name in self.cleaned_data['presets'].split(',') if name.strip()]
        if not names:
            raise forms.ValidationError("At least one --preset is required.")
        return list(dict.fromkeys(names))

    def clean_seed(self):
        seed = self.cleaned_data.get('seed')
        return 0 if seed is None else seed
