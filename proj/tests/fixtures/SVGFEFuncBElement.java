package def.dom;
public class SVGFEFuncBElement extends SVGComponentTransferFunctionElement {
    public SVGFEFuncBElement prototype;
    public SVGFEFuncBElement(){}
}
